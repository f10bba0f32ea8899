use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply_delta, apply_updates, extract_updates, is_total_transformation, EngineError, UpdateOutcome};
use crate::model::{info_leq, Database, Interpretation, UpdateProgram};
use crate::rewrite::{ground_with, rewrite_bm, rewrite_st, GroundProgram, GroundingMode};
use crate::semantics::{models, well_founded, EnumerationConfig, ModelFamily, ModelFlags};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemanticsId {
    /// Well-founded model.
    Ws,
    /// Max-deterministic model.
    Md,
    /// Well-founded, only if the result is total.
    Twfs,
    /// Max-deterministic, only if the result is total.
    Tmds,
    /// The unique T-stable model.
    Uts,
    /// Some T-stable model.
    Ts,
    /// Some M-stable model.
    Ms,
    /// Some M-stable model whose result is total.
    Mstt,
    /// Well-founded model of the complementary-literal rewriting.
    WsBm,
}

impl SemanticsId {
    pub const ALL: [SemanticsId; 9] = [
        SemanticsId::Ws,
        SemanticsId::Md,
        SemanticsId::Twfs,
        SemanticsId::Tmds,
        SemanticsId::Uts,
        SemanticsId::Ts,
        SemanticsId::Ms,
        SemanticsId::Mstt,
        SemanticsId::WsBm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SemanticsId::Ws => "ws",
            SemanticsId::Md => "md",
            SemanticsId::Twfs => "twfs",
            SemanticsId::Tmds => "tmds",
            SemanticsId::Uts => "uts",
            SemanticsId::Ts => "ts",
            SemanticsId::Ms => "ms",
            SemanticsId::Mstt => "mstt",
            SemanticsId::WsBm => "ws-bm",
        }
    }

    pub fn requires_total_input(self) -> bool {
        !matches!(self, SemanticsId::Ws | SemanticsId::Md | SemanticsId::WsBm)
    }

    /// Semantics whose result does not depend on a selection policy.
    pub fn is_deterministic(self) -> bool {
        !matches!(self, SemanticsId::Ts | SemanticsId::Ms | SemanticsId::Mstt)
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SemanticsId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let lower = s.to_ascii_lowercase().replace('_', "-");
        SemanticsId::ALL
            .into_iter()
            .find(|id| id.as_str() == lower)
            .ok_or_else(|| alloc::format!("unknown semantics {s}"))
    }
}

/// How the nondeterministic semantics pick a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SelectionPolicy {
    /// The first eligible model in canonical order.
    #[default]
    Lexicographic,
    /// A uniform choice driven by the seed.
    Seeded(u64),
}

impl SelectionPolicy {
    fn choose(self, candidates: usize) -> usize {
        match self {
            SelectionPolicy::Lexicographic => 0,
            SelectionPolicy::Seeded(seed) => ChaCha8Rng::seed_from_u64(seed).random_range(0..candidates),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub semantics: SemanticsId,
    pub policy: SelectionPolicy,
    pub enumeration: EnumerationConfig,
    pub grounding: GroundingMode,
}

impl RunConfig {
    pub fn new(semantics: SemanticsId) -> Self {
        Self {
            semantics,
            policy: SelectionPolicy::default(),
            enumeration: EnumerationConfig::default(),
            grounding: GroundingMode::default(),
        }
    }

    pub fn with_policy(mut self, policy: SelectionPolicy) -> Self {
        self.policy = policy;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    Applied,
    /// The semantics rejected the program; the database is unchanged.
    RejectedUnchanged,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct FamilyStats {
    pub models: usize,
    pub t_stable: usize,
    pub m_stable: usize,
    pub l_stable: usize,
    pub deterministic: usize,
}

impl FamilyStats {
    fn of(family: &ModelFamily) -> Self {
        Self {
            models: family.len(),
            t_stable: family.count(ModelFlags::T_STABLE),
            m_stable: family.count(ModelFlags::M_STABLE),
            l_stable: family.count(ModelFlags::L_STABLE),
            deterministic: family.count(ModelFlags::DETERMINISTIC),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub semantics: SemanticsId,
    pub policy: SelectionPolicy,
    pub input_db: Database,
    pub output_db: Database,
    pub status: RunStatus,
    /// The model whose updates were applied, or the one that was rejected.
    pub chosen_model: Option<Interpretation>,
    pub outcome: Option<UpdateOutcome>,
    /// Counts per model class when the semantics needs the whole family.
    pub family_stats: Option<FamilyStats>,
}

/// A model, the database its updates were applied to and the result.
struct Applied {
    model: Interpretation,
    outcome: UpdateOutcome,
    output: Database,
}

/// Evaluates the update program on `d` and applies the selected model's
/// updates. Every semantics except the complementary-literal one applies
/// them to `δ(D)`; that one applies them to `D`.
pub fn run(up: &UpdateProgram, d: &Database, cfg: &RunConfig) -> Result<RunReport, EngineError> {
    let xs = cfg.semantics;
    if xs.requires_total_input() && !d.is_total() {
        return Err(EngineError::NonTotalInput { semantics: xs });
    }
    let rewritten = match xs {
        SemanticsId::WsBm => rewrite_bm(up),
        _ => rewrite_st(up),
    };
    let program = ground_with(&rewritten.embed(d), cfg.grounding)?;
    let base = match xs {
        SemanticsId::WsBm => d.clone(),
        _ => apply_delta(&up.delta, d)?,
    };
    let apply = |model: &Interpretation| -> Result<Applied, EngineError> {
        let outcome = extract_updates(model)?;
        let output = apply_updates(&outcome, &base)?;
        if base.is_total() && is_total_transformation(model, &base) != output.is_total() {
            return Err(EngineError::TotalityMismatch { semantics: xs });
        }
        Ok(Applied { model: model.clone(), outcome, output })
    };
    let report = |status: RunStatus, applied: Option<Applied>, stats: Option<FamilyStats>| {
        let (chosen_model, outcome, output_db) = match (status, applied) {
            (RunStatus::Applied, Some(a)) => (Some(a.model), Some(a.outcome), a.output),
            (_, a) => (a.map(|a| a.model), None, d.clone()),
        };
        RunReport {
            semantics: xs,
            policy: cfg.policy,
            input_db: d.clone(),
            output_db,
            status,
            chosen_model,
            outcome,
            family_stats: stats,
        }
    };
    let total_only = |a: Applied| {
        let status = if a.output.is_total() { RunStatus::Applied } else { RunStatus::RejectedUnchanged };
        (status, a)
    };

    match xs {
        SemanticsId::Ws | SemanticsId::WsBm => {
            let a = apply(&well_founded(&program))?;
            Ok(report(RunStatus::Applied, Some(a), None))
        }
        SemanticsId::Twfs => {
            let (status, a) = total_only(apply(&well_founded(&program))?);
            Ok(report(status, Some(a), None))
        }
        SemanticsId::Md | SemanticsId::Tmds => {
            let family = family_of(&program, cfg)?;
            let md = family.max_deterministic().expect("classified family has a max-deterministic model");
            let a = apply(md)?;
            let stats = Some(FamilyStats::of(&family));
            if xs == SemanticsId::Md {
                return Ok(report(RunStatus::Applied, Some(a), stats));
            }
            let (status, a) = total_only(a);
            Ok(report(status, Some(a), stats))
        }
        SemanticsId::Uts | SemanticsId::Ts | SemanticsId::Ms => {
            let family = family_of(&program, cfg)?;
            let stats = Some(FamilyStats::of(&family));
            let flag = if xs == SemanticsId::Ms { ModelFlags::M_STABLE } else { ModelFlags::T_STABLE };
            let eligible: Vec<&Interpretation> = family.with_flags(flag).collect();
            let pick = match (xs, eligible.len()) {
                (_, 0) => None,
                (SemanticsId::Uts, 1) => Some(eligible[0]),
                (SemanticsId::Uts, _) => None,
                (_, n) => Some(eligible[cfg.policy.choose(n)]),
            };
            match pick {
                Some(m) => Ok(report(RunStatus::Applied, Some(apply(m)?), stats)),
                None => Ok(report(RunStatus::RejectedUnchanged, None, stats)),
            }
        }
        SemanticsId::Mstt => {
            let family = family_of(&program, cfg)?;
            let stats = Some(FamilyStats::of(&family));
            let mut eligible = Vec::new();
            for m in family.with_flags(ModelFlags::M_STABLE) {
                let a = apply(m)?;
                if a.output.is_total() {
                    eligible.push(a);
                }
            }
            if eligible.is_empty() {
                return Ok(report(RunStatus::RejectedUnchanged, None, stats));
            }
            let i = cfg.policy.choose(eligible.len());
            Ok(report(RunStatus::Applied, Some(eligible.swap_remove(i)), stats))
        }
    }
}

fn family_of(program: &GroundProgram, cfg: &RunConfig) -> Result<ModelFamily, EngineError> {
    Ok(models(program, &cfg.enumeration)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub semantics: SemanticsId,
    pub result: Result<RunReport, EngineError>,
}

/// Every semantics run on the same input, with the knowledge ordering between
/// their outputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub rows: Vec<ComparisonRow>,
    /// `leq[i][j]`: row `i`'s output is at most as informative as row `j`'s;
    /// `None` when either row failed.
    pub leq: Vec<Vec<Option<bool>>>,
}

/// Runs all nine semantics with the lexicographic policy. A failing row does
/// not stop the others.
pub fn compare(up: &UpdateProgram, d: &Database, base: &RunConfig) -> Comparison {
    let rows: Vec<ComparisonRow> = SemanticsId::ALL
        .into_iter()
        .map(|semantics| {
            let cfg = RunConfig { semantics, policy: SelectionPolicy::Lexicographic, ..*base };
            ComparisonRow { semantics, result: run(up, d, &cfg) }
        })
        .collect();
    let leq = rows
        .iter()
        .map(|a| {
            rows.iter()
                .map(|b| match (&a.result, &b.result) {
                    (Ok(x), Ok(y)) => info_leq(&x.output_db, &y.output_db).ok(),
                    _ => None,
                })
                .collect()
        })
        .collect();
    Comparison { rows, leq }
}
