//! Expected behaviour of the fixture corpus.

use std::collections::BTreeSet;

use actlog_core::{
    extract_updates, ground_with, models, run, Database, EnumerationConfig, GroundingMode,
    Interpretation, ModelFamily, ModelFlags, RunConfig, RunReport, RunStatus, SelectionPolicy,
    SemanticsId,
};

use crate::fixtures::{self, Fixture};
use crate::{format, oracle, properties};

pub type Check = (&'static str, fn() -> Result<(), String>);

pub const CHECKS: &[Check] = &[
    ("partial_models", partial_models),
    ("partial_models_no_fact", partial_models_no_fact),
    ("four_models", four_models),
    ("negation_chain", negation_chain),
    ("confirm_manager", confirm_manager),
    ("worker_choice", worker_choice),
    ("worker_choice_derived", worker_choice_derived),
    ("unique_total", unique_total),
    ("emp_or_mgr", emp_or_mgr),
    ("manager_livelock", manager_livelock),
    ("promotion", promotion),
    ("golden_rewrites", golden_rewrites),
    ("round_trip", round_trip),
];

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// An interpretation over `universe` from literals like `"a. not b."`;
/// atoms not mentioned are undefined.
pub fn interp(universe: &str, literals: &str) -> Interpretation {
    let given = format::parse_interpretation(literals).expect("literal list parses");
    let mut m = Interpretation::undefined(
        format::parse_interpretation(universe).expect("universe parses").universe().cloned(),
    );
    for (a, v) in given.iter() {
        m.set(a.clone(), v);
    }
    m
}

fn rendered<'a>(ms: impl IntoIterator<Item = &'a Interpretation>) -> BTreeSet<String> {
    ms.into_iter().map(ToString::to_string).collect()
}

fn family(f: &Fixture) -> Result<ModelFamily, String> {
    models(&f.ground_plain(), &EnumerationConfig::default()).map_err(|e| e.to_string())
}

fn expect_models(fam: &ModelFamily, flag: Option<ModelFlags>, expected: &[&Interpretation]) -> Result<(), String> {
    let found = match flag {
        Some(flag) => rendered(fam.with_flags(flag)),
        None => rendered(fam.models()),
    };
    let expected = rendered(expected.iter().copied());
    let label = flag.map_or("all".to_string(), |f| f.labels().collect::<Vec<_>>().join(","));
    ensure(found == expected, || format!("{label} models: found {found:?}, expected {expected:?}"))
}

const PARTIAL_UNIVERSE: &str = "a? b? c? d? e? p? q?";

/// The five models of the choice program with fact `a`, in the order
/// listed for it: well-founded first, total last.
pub fn partial_models_listing() -> Vec<Interpretation> {
    ["a.", "a. b. not c.", "a. not b. c. not p.", "a. not b. c. not p. not d. e.", "a. not b. c. not p. d. not e. not q."]
        .iter()
        .map(|l| interp(PARTIAL_UNIVERSE, l))
        .collect()
}

/// The three models of the same program without `a`.
pub fn partial_models_no_fact_listing() -> Vec<Interpretation> {
    ["not a. not d. not e.", "not a. not d. not e. b. not c.", "not a. not d. not e. not b. c. not p."]
        .iter()
        .map(|l| interp(PARTIAL_UNIVERSE, l))
        .collect()
}

const FOUR_UNIVERSE: &str = "a? b? c? d?";

/// Well-founded, max-deterministic and the two total models.
pub fn four_models_listing() -> Vec<Interpretation> {
    ["", "c. not d.", "a. not b. c. not d.", "not a. b. c. not d."].iter().map(|l| interp(FOUR_UNIVERSE, l)).collect()
}

fn partial_models() -> Result<(), String> {
    let fam = family(fixtures::named("partial_models"))?;
    let m = partial_models_listing();
    expect_models(&fam, None, &m.iter().collect::<Vec<_>>())?;
    expect_models(&fam, Some(ModelFlags::WELL_FOUNDED), &[&m[0]])?;
    expect_models(&fam, Some(ModelFlags::M_STABLE), &[&m[1], &m[3], &m[4]])?;
    expect_models(&fam, Some(ModelFlags::L_STABLE), &[&m[4]])?;
    expect_models(&fam, Some(ModelFlags::T_STABLE), &[&m[4]])
}

fn partial_models_no_fact() -> Result<(), String> {
    let fam = family(fixtures::named("partial_models_no_fact"))?;
    let m = partial_models_no_fact_listing();
    expect_models(&fam, None, &m.iter().collect::<Vec<_>>())?;
    expect_models(&fam, Some(ModelFlags::L_STABLE), &[&m[2]])?;
    expect_models(&fam, Some(ModelFlags::T_STABLE), &[])?;
    let q = interp("q?", "").universe().next().cloned().expect("one atom");
    let all_undefined = fam.models().all(|m| m.get(&q) == Some(actlog_core::TruthValue::Undefined));
    ensure(all_undefined, || "q is defined in some model".into())
}

fn four_models() -> Result<(), String> {
    let f = fixtures::named("four_models");
    let fam = family(f)?;
    let m = four_models_listing();
    ensure(fam.len() == 4, || format!("{} models instead of 4", fam.len()))?;
    expect_models(&fam, Some(ModelFlags::WELL_FOUNDED), &[&m[0]])?;
    expect_models(&fam, Some(ModelFlags::T_STABLE), &[&m[2], &m[3]])?;
    expect_models(&fam, Some(ModelFlags::MAX_DETERMINISTIC), &[&m[1]])?;
    properties::check_lattice(&f.ground_plain(), &fam)
}

fn negation_chain() -> Result<(), String> {
    let p = fixtures::named("negation_chain").ground_plain();
    let fam = models(&p, &EnumerationConfig::default()).map_err(|e| e.to_string())?;
    let found = rendered(fam.models());
    let expected = rendered(&oracle::pstable_models(&p));
    ensure(found == expected, || format!("found {found:?}, brute force {expected:?}"))
}

fn run_fixture(f: &Fixture, cfg: RunConfig) -> Result<RunReport, String> {
    let up = f.update_program().map_err(|e| e.to_string())?;
    let d = f.database().map_err(|e| e.to_string())?;
    run(&up, &d, &cfg).map_err(|e| format!("{}: {e}", cfg.semantics))
}

fn facts(d: &Database) -> (BTreeSet<String>, BTreeSet<String>) {
    (d.true_facts().map(ToString::to_string).collect(), d.unknown_facts().map(ToString::to_string).collect())
}

fn expect_db(r: &RunReport, true_facts: &[&str], unknown: &[&str]) -> Result<(), String> {
    let (t, u) = facts(&r.output_db);
    let want_t: BTreeSet<String> = true_facts.iter().map(|s| s.to_string()).collect();
    let want_u: BTreeSet<String> = unknown.iter().map(|s| s.to_string()).collect();
    ensure(t == want_t && u == want_u, || {
        format!("{}: output true {t:?} unknown {u:?}, expected true {want_t:?} unknown {want_u:?}", r.semantics)
    })
}

fn confirm_manager() -> Result<(), String> {
    let f = fixtures::named("confirm_manager");
    let ws = run_fixture(f, RunConfig::new(SemanticsId::Ws))?;
    expect_db(&ws, &["confirm(x,d)", "mgr(x,d)"], &[])?;
    let bm = run_fixture(f, RunConfig::new(SemanticsId::WsBm))?;
    ensure(actlog_core::info_leq(&bm.output_db, &ws.output_db) == Ok(true), || "ws-bm output is not below ws".into())?;
    // with the manager already stored, the complementary rewriting cannot
    // decide between keeping and deleting it
    let up = f.update_program().map_err(|e| e.to_string())?;
    let stored = format::parse_database("mgr(x,d).").map_err(|e| e.to_string())?;
    let bm = run(&up, &stored, &RunConfig::new(SemanticsId::WsBm)).map_err(|e| e.to_string())?;
    expect_db(&bm, &["confirm(x,d)"], &["mgr(x,d)"])
}

fn worker_choice() -> Result<(), String> {
    let f = fixtures::named("worker_choice");
    let md = run_fixture(f, RunConfig::new(SemanticsId::Md))?;
    expect_db(&md, &["new(a)", "worker(a)"], &["emp(a)", "mgr(a)"])?;
    let m = md.chosen_model.as_ref().ok_or("md chose no model")?;
    let expected = interp("@plus_worker(a)? @plus_emp(a)? @plus_mgr(a)? @plus_noworker(a)?", "@plus_worker(a). not @plus_noworker(a).");
    for (a, v) in expected.iter() {
        ensure(m.get(a) == Some(v), || format!("md model has {a} = {:?}", m.get(a)))?;
    }
    let ws = run_fixture(f, RunConfig::new(SemanticsId::Ws))?;
    expect_db(&ws, &["new(a)"], &["emp(a)", "mgr(a)", "noworker(a)", "worker(a)"])
}

fn worker_choice_derived() -> Result<(), String> {
    let f = fixtures::named("worker_choice_derived");
    let twfs = run_fixture(f, RunConfig::new(SemanticsId::Twfs))?;
    ensure(twfs.status == RunStatus::RejectedUnchanged && twfs.output_db == twfs.input_db, || {
        "twfs did not reject".into()
    })?;
    let tmds = run_fixture(f, RunConfig::new(SemanticsId::Tmds))?;
    ensure(tmds.status == RunStatus::Applied, || "tmds rejected".into())?;
    expect_db(&tmds, &["new(a)", "worker(a)"], &[])
}

fn unique_total() -> Result<(), String> {
    let r = run_fixture(fixtures::named("unique_total"), RunConfig::new(SemanticsId::Uts))?;
    ensure(r.status == RunStatus::Applied, || "uts rejected".into())?;
    expect_db(&r, &["emp(a)", "new(a)", "worker(a)"], &[])
}

fn emp_or_mgr() -> Result<(), String> {
    let f = fixtures::named("emp_or_mgr");
    let policies = [SelectionPolicy::Lexicographic].into_iter().chain((0..8).map(SelectionPolicy::Seeded));
    let mut seen = BTreeSet::new();
    for policy in policies {
        let r = run_fixture(f, RunConfig::new(SemanticsId::Ms).with_policy(policy))?;
        let (t, u) = facts(&r.output_db);
        let chosen: Vec<&str> = ["emp(a)", "mgr(a)"].into_iter().filter(|a| t.contains(*a)).collect();
        ensure(t.contains("worker(a)") && chosen.len() == 1 && u.is_empty(), || {
            format!("ms under {policy:?}: true {t:?} unknown {u:?}")
        })?;
        seen.insert(chosen[0]);
    }
    ensure(seen.len() == 2, || format!("seeded choices only reached {seen:?}"))
}

/// Runs the well-founded semantics and compares it with the brute-force
/// well-founded model pushed through the oracle application table.
fn against_oracle(f: &Fixture) -> Result<RunReport, String> {
    let up = f.update_program().map_err(|e| e.to_string())?;
    let d = f.database().map_err(|e| e.to_string())?;
    let cfg = RunConfig { grounding: GroundingMode::Relevant, ..RunConfig::new(SemanticsId::Ws) };
    let r = run(&up, &d, &cfg).map_err(|e| e.to_string())?;
    let full = run(&up, &d, &RunConfig::new(SemanticsId::Ws)).map_err(|e| e.to_string())?;
    ensure(full.output_db == r.output_db, || "relevant and full grounding disagree".into())?;
    let p = ground_with(&actlog_core::rewrite_st(&up).embed(&d), GroundingMode::Relevant).map_err(|e| e.to_string())?;
    let wf = oracle::well_founded(&p);
    let u = extract_updates(&wf).map_err(|e| e.to_string())?;
    let base = actlog_core::apply_delta(&up.delta, &d).map_err(|e| e.to_string())?;
    let table = oracle::apply_updates(u.certain_insert(), u.certain_delete(), u.undef_insert(), u.undef_delete(), &base);
    let mine: Vec<_> = r.output_db.facts().map(|(a, s)| (a.clone(), s)).collect();
    ensure(mine == table, || format!("ws output {mine:?}, oracle {table:?}"))?;
    Ok(r)
}

fn manager_livelock() -> Result<(), String> {
    let r = against_oracle(fixtures::named("manager_livelock"))?;
    expect_db(&r, &[], &["mgr(x,p,d)"])?;
    let u = r.outcome.as_ref().ok_or("no outcome")?;
    let m: BTreeSet<String> = ["mgr(x,p,d)".to_string()].into();
    let names = |s: &BTreeSet<actlog_core::Atom>| s.iter().map(ToString::to_string).collect::<BTreeSet<_>>();
    ensure(
        u.certain_insert().is_empty()
            && u.certain_delete().is_empty()
            && names(u.undef_insert()) == m
            && names(u.undef_delete()) == m,
        || format!("unexpected outcome {u:?}"),
    )
}

fn promotion() -> Result<(), String> {
    against_oracle(fixtures::named("promotion")).map(|_| ())
}

fn golden_rewrites() -> Result<(), String> {
    for (name, mode, text) in fixtures::GOLDEN_REWRITES {
        let found = fixtures::named(name).rewrite(mode).to_string();
        ensure(found == *text, || format!("{name} {mode} rewrite:\n{found}expected:\n{text}"))?;
    }
    Ok(())
}

fn round_trip() -> Result<(), String> {
    for f in fixtures::ALL {
        let err = |e: format::FormatError| format!("{}: {e}", f.name);
        let program = f.program().map_err(err)?;
        let db = f.database().map_err(err)?;
        let delta = format::parse_delta(f.delta).map_err(err)?;
        ensure(format::parse_program(&program.to_string()).map_err(err)? == program, || format!("{} program", f.name))?;
        ensure(format::parse_database(&db.to_string()).map_err(err)? == db, || format!("{} database", f.name))?;
        ensure(format::parse_delta(&delta.to_string()).map_err(err)? == delta, || format!("{} updates", f.name))?;
        for mode in ["st", "bm"] {
            let st = f.rewrite(mode);
            let back = format::parse_rules(&st.to_string()).map_err(err)?;
            ensure(same_rules(&back, st.rules()), || format!("{} {mode} rewrite", f.name))?;
        }
    }
    Ok(())
}

fn same_rules(a: &[actlog_core::Rule], b: &[actlog_core::Rule]) -> bool {
    let key = |rs: &[actlog_core::Rule]| rs.iter().map(ToString::to_string).collect::<BTreeSet<_>>();
    key(a) == key(b)
}
