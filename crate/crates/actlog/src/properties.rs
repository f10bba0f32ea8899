//! Property checks shared by `selftest` and the test suites. Each returns
//! the first violation as a message that includes the offending input.

use std::collections::BTreeSet;

use actlog_core::semantics::well_founded_alternating;
use actlog_core::{
    apply_delta, apply_updates, enumerate_pstable, enumerate_pstable_exhaustive, extract_updates,
    ground_with, info_leq, is_pstable, is_total_transformation, models, rewrite_st, run, ConstantMap,
    Database, EngineError, EnumerationConfig, GroundProgram, Interpretation, ModelFlags, Rename,
    RunConfig, RunReport, RunStatus, SemanticsError, SemanticsId, UpdateProgram,
};

use crate::{format, oracle};

/// What happened to one random case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Checked,
    /// The case was too large for exhaustive enumeration.
    Skipped,
}

/// A case as fixture text: program, database and update set.
pub fn render_case(up: &UpdateProgram, d: &Database) -> String {
    format!("% program\n{}% database\n{}% updates\n{}", up.program, d, up.delta)
}

fn is_cap(e: &EngineError) -> bool {
    matches!(e, EngineError::Semantics(SemanticsError::CapExceeded { .. }))
}

fn leq(a: &Database, b: &Database) -> bool {
    info_leq(a, b).unwrap_or(false)
}

/// Output well-formedness and the rejection law for one report.
fn check_report(r: &RunReport) -> Result<(), String> {
    let t: BTreeSet<_> = r.output_db.true_facts().collect();
    if let Some(a) = r.output_db.unknown_facts().find(|a| t.contains(a)) {
        return Err(format!("{}: {a} is both true and unknown", r.semantics));
    }
    let reparsed = format::parse_database(&r.output_db.to_string()).map_err(|e| e.to_string())?;
    if reparsed != r.output_db {
        return Err(format!("{}: output does not survive a round trip", r.semantics));
    }
    if r.status == RunStatus::RejectedUnchanged && r.output_db != r.input_db {
        return Err(format!("{}: rejected run changed the database", r.semantics));
    }
    Ok(())
}

/// Runs every semantics on a total database and checks:
///
/// - the complementary-literal output is below the well-founded one, which
///   is below the max-deterministic one;
/// - every P-stable model carries consistent updates, and its application is
///   total exactly when the totality test says so, agreeing with the oracle
///   application table;
/// - the deterministic models lie between the well-founded and the
///   max-deterministic model and are pairwise consistent;
/// - outputs are well formed and rejected runs leave the database alone.
pub fn check_update_case(up: &UpdateProgram, d: &Database) -> Result<Verdict, String> {
    let case = || render_case(up, d);
    let mut outputs = Vec::new();
    for xs in SemanticsId::ALL {
        match run(up, d, &RunConfig::new(xs)) {
            Ok(r) => {
                check_report(&r).map_err(|e| format!("{e}\n{}", case()))?;
                outputs.push((xs, r.output_db));
            }
            Err(e) if is_cap(&e) => return Ok(Verdict::Skipped),
            Err(e) => return Err(format!("{xs}: {e}\n{}", case())),
        }
    }
    let out = |xs: SemanticsId| &outputs.iter().find(|(s, _)| *s == xs).expect("every semantics ran").1;
    if !leq(out(SemanticsId::WsBm), out(SemanticsId::Ws)) {
        return Err(format!("ws-bm output is not below ws output\n{}", case()));
    }
    if !leq(out(SemanticsId::Ws), out(SemanticsId::Md)) {
        return Err(format!("ws output is not below md output\n{}", case()));
    }

    let program = ground_with(&rewrite_st(up).embed(d), Default::default()).map_err(|e| e.to_string())?;
    let family = match models(&program, &EnumerationConfig::default()) {
        Ok(f) => f,
        Err(SemanticsError::CapExceeded { .. }) => return Ok(Verdict::Skipped),
        Err(e) => return Err(format!("{e}\n{}", case())),
    };
    let base = apply_delta(&up.delta, d).map_err(|e| e.to_string())?;
    for m in family.models() {
        let u = extract_updates(m).map_err(|e| format!("model {m}: {e}\n{}", case()))?;
        let applied = apply_updates(&u, &base).map_err(|e| e.to_string())?;
        if is_total_transformation(m, &base) != applied.is_total() {
            return Err(format!("totality test disagrees for model {m}\n{}", case()));
        }
        let table = oracle::apply_updates(u.certain_insert(), u.certain_delete(), u.undef_insert(), u.undef_delete(), &base);
        let mine: Vec<_> = applied.facts().map(|(a, s)| (a.clone(), s)).collect();
        if mine != table {
            return Err(format!("application differs from the table for model {m}\n{}", case()));
        }
    }
    check_lattice(&program, &family).map_err(|e| format!("{e}\n{}", case()))?;
    Ok(Verdict::Checked)
}

/// The deterministic models form a lattice from the well-founded model to
/// the max-deterministic one.
pub fn check_lattice(p: &GroundProgram, family: &actlog_core::ModelFamily) -> Result<(), String> {
    let wf = actlog_core::well_founded(p);
    if family.well_founded() != Some(&wf) {
        return Err("well-founded model is not flagged in the family".into());
    }
    let md = family.max_deterministic().ok_or("no max-deterministic model")?;
    let det: Vec<&Interpretation> = family.with_flags(ModelFlags::DETERMINISTIC).collect();
    for m in &det {
        if !wf.literal_subset(m) || !m.literal_subset(md) {
            return Err(format!("deterministic model {m} is outside the lattice"));
        }
        for n in &det {
            if m.union(n).is_none() {
                return Err(format!("deterministic models {m} and {n} conflict"));
            }
        }
    }
    let mut all = family.models();
    let first = all.next().ok_or("empty family")?.clone();
    let meet = all.fold(first, |acc, m| acc.intersection(m));
    if meet != wf {
        return Err(format!("well-founded model {wf} is not the intersection {meet}"));
    }
    Ok(())
}

fn rendered(models: impl IntoIterator<Item = Interpretation>) -> BTreeSet<String> {
    models.into_iter().map(|m| m.to_string()).collect()
}

/// The search, the exhaustive baseline and brute force agree on the
/// P-stable models, and both well-founded routes give their intersection.
pub fn check_ground_program(p: &GroundProgram) -> Result<(), String> {
    let case = || format!("% program\n{p}");
    let cfg = EnumerationConfig::default();
    let expected = rendered(oracle::pstable_models(p));
    let found = enumerate_pstable(p, &cfg).map_err(|e| e.to_string())?;
    let found_set = rendered(found.models().cloned());
    if found_set != expected {
        return Err(format!("search found {found_set:?}, brute force {expected:?}\n{}", case()));
    }
    let baseline = rendered(enumerate_pstable_exhaustive(p, &cfg).map_err(|e| e.to_string())?.models().cloned());
    if baseline != expected {
        return Err(format!("baseline found {baseline:?}, brute force {expected:?}\n{}", case()));
    }
    if let Some(m) = found.models().find(|m| !is_pstable(p, m)) {
        return Err(format!("{m} is not P-stable\n{}", case()));
    }
    let wf = oracle::well_founded(p);
    if actlog_core::well_founded(p) != wf || well_founded_alternating(p) != wf {
        return Err(format!("well-founded model differs from {wf}\n{}", case()));
    }
    Ok(())
}

/// Renaming the database commutes with every deterministic semantics.
pub fn check_generic(up: &UpdateProgram, d: &Database, rho: &ConstantMap) -> Result<Verdict, String> {
    if !rho.fixes(up.constants()) {
        return Err("renaming moves a program constant".into());
    }
    let renamed = d.rename(rho);
    for xs in SemanticsId::ALL.into_iter().filter(|xs| xs.is_deterministic()) {
        let cfg = RunConfig::new(xs);
        let (a, b) = match (run(up, d, &cfg), run(up, &renamed, &cfg)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) if is_cap(&e) => return Ok(Verdict::Skipped),
            (Err(e), _) | (_, Err(e)) => return Err(format!("{xs}: {e}\n{}", render_case(up, d))),
        };
        if a.status != b.status || a.output_db.rename(rho) != b.output_db {
            return Err(format!("{xs} does not commute with {rho:?}\n{}", render_case(up, d)));
        }
    }
    Ok(Verdict::Checked)
}
