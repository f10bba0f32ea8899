//! One line per acceptance criterion. Exits nonzero when any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use actlog::expect::{self, interp};
use actlog::fixtures::{self, Fixture};
use actlog::{format, oracle, properties, selftest};
use actlog_core::{
    info_leq, models, run, well_founded, Database, EnumerationConfig, FactStatus, Interpretation,
    ModelFamily, ModelFlags, RunConfig, RunReport, RunStatus, SelectionPolicy, SemanticsId,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn check(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn rendered<'a>(ms: impl IntoIterator<Item = &'a Interpretation>) -> BTreeSet<String> {
    ms.into_iter().map(ToString::to_string).collect()
}

fn flagged(f: &ModelFamily, flag: ModelFlags) -> BTreeSet<String> {
    rendered(f.with_flags(flag))
}

fn family_of(f: &Fixture) -> Result<ModelFamily, String> {
    models(&f.ground_plain(), &EnumerationConfig::default()).map_err(|e| e.to_string())
}

/// Also checks the engine's family against brute force.
fn brute_force_agrees(f: &Fixture, fam: &ModelFamily) -> Outcome {
    let expected = rendered(&oracle::pstable_models(&f.ground_plain()));
    let found = rendered(fam.models());
    check(found == expected, || format!("{}: engine {found:?}, brute force {expected:?}", f.name))
}

fn partial_models() -> Outcome {
    let f = fixtures::named("partial_models");
    let fam = family_of(f)?;
    brute_force_agrees(f, &fam)?;
    let m = expect::partial_models_listing();
    check(rendered(fam.models()) == rendered(&m), || format!("models {:?}", rendered(fam.models())))?;
    check(well_founded(&f.ground_plain()) == m[0], || "well-founded model is not {a}".into())?;
    check(flagged(&fam, ModelFlags::M_STABLE) == rendered([&m[1], &m[3], &m[4]]), || "m-stable set".into())?;
    check(flagged(&fam, ModelFlags::L_STABLE) == rendered([&m[4]]), || "l-stable set".into())?;
    check(flagged(&fam, ModelFlags::T_STABLE) == rendered([&m[4]]), || "t-stable set".into())?;

    let g = fixtures::named("partial_models_no_fact");
    let fam = family_of(g)?;
    brute_force_agrees(g, &fam)?;
    let n = expect::partial_models_no_fact_listing();
    check(fam.len() == 3 && rendered(fam.models()) == rendered(&n), || "three models without the fact".into())?;
    check(flagged(&fam, ModelFlags::L_STABLE).contains(&n[2].to_string()), || "third model is not l-stable".into())?;
    check(!flagged(&fam, ModelFlags::T_STABLE).contains(&n[2].to_string()), || "third model is t-stable".into())?;
    let q = interp("q?", "").universe().next().cloned().expect("one atom");
    let q_undefined = fam.models().all(|m| m.get(&q) == Some(actlog_core::TruthValue::Undefined));
    check(q_undefined, || "q is defined in some model".into())
}

fn four_models() -> Outcome {
    let f = fixtures::named("four_models");
    let fam = family_of(f)?;
    brute_force_agrees(f, &fam)?;
    let m = expect::four_models_listing();
    check(fam.len() == 4, || format!("{} models", fam.len()))?;
    check(well_founded(&f.ground_plain()) == m[0], || "well-founded model is not empty".into())?;
    check(flagged(&fam, ModelFlags::T_STABLE) == rendered([&m[2], &m[3]]), || "t-stable set".into())?;
    check(fam.max_deterministic() == Some(&m[1]), || format!("max-deterministic {:?}", fam.max_deterministic()))?;
    properties::check_lattice(&f.ground_plain(), &fam)
}

fn run_fixture(name: &str, xs: SemanticsId, policy: SelectionPolicy) -> Result<RunReport, String> {
    let f = fixtures::named(name);
    let up = f.update_program().map_err(|e| e.to_string())?;
    let d = f.database().map_err(|e| e.to_string())?;
    run(&up, &d, &RunConfig::new(xs).with_policy(policy)).map_err(|e| format!("{xs}: {e}"))
}

fn lex(name: &str, xs: SemanticsId) -> Result<RunReport, String> {
    run_fixture(name, xs, SelectionPolicy::Lexicographic)
}

fn status(d: &Database, fact: &str) -> Option<FactStatus> {
    let atom = format::parse_interpretation(&format!("{fact}."))
        .expect("fact parses")
        .universe()
        .next()
        .cloned()
        .expect("one atom");
    d.status(&atom)
}

fn confirm_manager() -> Outcome {
    let ws = lex("confirm_manager", SemanticsId::Ws)?;
    check(ws.output_db.is_total(), || format!("ws output is not total:\n{}", ws.output_db))?;
    check(status(&ws.output_db, "mgr(x,d)") == Some(FactStatus::True), || "ws: mgr(x,d) is not true".into())?;
    let bm = lex("confirm_manager", SemanticsId::WsBm)?;
    check(info_leq(&bm.output_db, &ws.output_db) == Ok(true), || "ws-bm output is not below ws output".into())?;
    check(status(&bm.output_db, "mgr(x,d)") == Some(FactStatus::Unknown), || {
        format!("ws-bm: mgr(x,d) is {:?}, not unknown; output:\n{}", status(&bm.output_db, "mgr(x,d)"), bm.output_db)
    })
}

fn worker_semantics() -> Outcome {
    let md = lex("worker_choice", SemanticsId::Md)?;
    check(status(&md.output_db, "worker(a)") == Some(FactStatus::True), || "md: worker(a) not inserted".into())?;
    for a in ["emp(a)", "mgr(a)"] {
        check(status(&md.output_db, a) == Some(FactStatus::Unknown), || format!("md: {a} is not unknown"))?;
    }

    let twfs = lex("worker_choice_derived", SemanticsId::Twfs)?;
    check(twfs.status == RunStatus::RejectedUnchanged && twfs.output_db == twfs.input_db, || "twfs applied".into())?;
    let tmds = lex("worker_choice_derived", SemanticsId::Tmds)?;
    check(tmds.status == RunStatus::Applied, || "tmds rejected".into())?;
    for a in ["new(a)", "worker(a)"] {
        check(status(&tmds.output_db, a) == Some(FactStatus::True), || format!("tmds: {a} missing"))?;
    }

    let uts = lex("unique_total", SemanticsId::Uts)?;
    let t: BTreeSet<String> = uts.output_db.true_facts().map(ToString::to_string).collect();
    let want: BTreeSet<String> = ["new(a)", "emp(a)", "worker(a)"].map(String::from).into();
    check(uts.status == RunStatus::Applied && t == want && uts.output_db.is_total(), || format!("uts: {t:?}"))?;

    for policy in [SelectionPolicy::Lexicographic, SelectionPolicy::Seeded(7), SelectionPolicy::Seeded(11)] {
        let ms = run_fixture("emp_or_mgr", SemanticsId::Ms, policy)?;
        let has = |a: &str| status(&ms.output_db, a) == Some(FactStatus::True);
        check(has("worker(a)") && (has("emp(a)") != has("mgr(a)")), || format!("ms under {policy:?}:\n{}", ms.output_db))?;
    }
    Ok(())
}

fn manager_livelock() -> Outcome {
    // engine against brute force, then the pinned values
    let (_, check_fn) = expect::CHECKS.iter().find(|(n, _)| *n == "manager_livelock").expect("check exists");
    check_fn()?;
    let ws = lex("manager_livelock", SemanticsId::Ws)?;
    check(status(&ws.output_db, "proj(p)").is_none(), || "proj(p) is still present".into())?;
    check(status(&ws.output_db, "mgr(x,p,d)") == Some(FactStatus::Unknown), || "mgr(x,p,d) is not unknown".into())
}

fn suite(r: selftest::SuiteResult, limit: Option<Duration>) -> Outcome {
    check(r.ok() && r.skipped == 0, || {
        format!("{}\n{}", r.summary(), r.failures.first().cloned().unwrap_or_default())
    })?;
    match limit {
        Some(limit) => check(r.elapsed < limit, || format!("took {:?}", r.elapsed)),
        None => Ok(()),
    }
}

fn update_properties() -> Outcome {
    let r = selftest::update_properties(selftest::DEFAULT_SEED, 200);
    check(r.passed == 200, || r.summary())?;
    suite(r, Some(Duration::from_secs(60)))
}

fn oracle_equivalence() -> Outcome {
    let r = selftest::oracle_equivalence(selftest::DEFAULT_SEED + 1, 100);
    check(r.passed == 100, || r.summary())?;
    suite(r, None)
}

fn genericity() -> Outcome {
    let r = selftest::genericity(selftest::DEFAULT_SEED + 2, 50);
    check(r.passed == 50, || r.summary())?;
    suite(r, None)
}

fn round_trip_and_golden() -> Outcome {
    let (_, round_trip) = expect::CHECKS.iter().find(|(n, _)| *n == "round_trip").expect("check exists");
    round_trip()?;
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/manager_livelock");
    let rewrite = || {
        Command::new(env!("CARGO_BIN_EXE_actlog"))
            .args(["rewrite", "--mode", "st", "-p"])
            .arg(format!("{dir}/program.adl"))
            .arg("-u")
            .arg(format!("{dir}/delta.adu"))
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (rewrite()?, rewrite()?);
    check(first.status.success() && second.status.success(), || "rewrite failed".into())?;
    check(first.stdout == second.stdout, || "two runs differ".into())?;
    let golden = std::fs::read(format!("{dir}/rewrite.st.adl")).map_err(|e| e.to_string())?;
    check(first.stdout == golden, || format!("output differs from golden:\n{}", String::from_utf8_lossy(&first.stdout)))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("A1", "partial models: five models, classes and the variant without the fact", partial_models),
        ("A2", "four models: well-founded, total and max-deterministic models", four_models),
        ("A3", "manager confirmation: ws total with mgr(x,d) true, ws-bm unknown and below", confirm_manager),
        ("A4", "worker programs under md, twfs, tmds, uts and ms", worker_semantics),
        ("A5", "manager livelock: proj(p) deleted, mgr(x,p,d) unknown", manager_livelock),
        ("A6", "200 random update programs: orderings, consistency, totality, lattice", update_properties),
        ("A7", "100 random ground programs against brute force", oracle_equivalence),
        ("A8", "50 random renamings commute with deterministic semantics", genericity),
        ("A9", "round trips and byte-stable golden rewrite", round_trip_and_golden),
    ];
    let mut failed = 0;
    for (id, what, f) in criteria {
        let start = Instant::now();
        match f() {
            Ok(()) => println!("{id} PASS {what} ({:.2?})", start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("{id} FAIL {what}: {e}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
