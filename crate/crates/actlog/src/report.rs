//! Machine-readable documents for `apply`, `models` and `compare`. Every
//! list is sorted, so equal inputs give byte-equal JSON.

use actlog_core::{
    Comparison, Database, FamilyStats, Interpretation, ModelFamily, RunReport, RunStatus,
    SelectionPolicy, TruthValue, UpdateOutcome,
};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct DatabaseDoc {
    #[serde(rename = "true")]
    pub true_facts: Vec<String>,
    pub unknown: Vec<String>,
}

impl DatabaseDoc {
    pub fn of(d: &Database) -> Self {
        Self {
            true_facts: d.true_facts().map(ToString::to_string).collect(),
            unknown: d.unknown_facts().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ModelDoc {
    #[serde(rename = "true")]
    pub true_atoms: Vec<String>,
    pub undefined: Vec<String>,
    pub false_count: usize,
}

impl ModelDoc {
    pub fn of(m: &Interpretation) -> Self {
        Self {
            true_atoms: m.with_value(TruthValue::True).map(ToString::to_string).collect(),
            undefined: m.with_value(TruthValue::Undefined).map(ToString::to_string).collect(),
            false_count: m.with_value(TruthValue::False).count(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutcomeDoc {
    pub certain_insert: Vec<String>,
    pub certain_delete: Vec<String>,
    pub undefined_insert: Vec<String>,
    pub undefined_delete: Vec<String>,
}

impl OutcomeDoc {
    pub fn of(u: &UpdateOutcome) -> Self {
        let list = |s: &std::collections::BTreeSet<actlog_core::Atom>| s.iter().map(ToString::to_string).collect();
        Self {
            certain_insert: list(u.certain_insert()),
            certain_delete: list(u.certain_delete()),
            undefined_insert: list(u.undef_insert()),
            undefined_delete: list(u.undef_delete()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyDoc {
    pub models: usize,
    pub t_stable: usize,
    pub m_stable: usize,
    pub l_stable: usize,
    pub deterministic: usize,
}

impl From<FamilyStats> for FamilyDoc {
    fn from(s: FamilyStats) -> Self {
        Self {
            models: s.models,
            t_stable: s.t_stable,
            m_stable: s.m_stable,
            l_stable: s.l_stable,
            deterministic: s.deterministic,
        }
    }
}

pub fn status_name(status: RunStatus) -> &'static str {
    match status {
        RunStatus::Applied => "applied",
        RunStatus::RejectedUnchanged => "rejected-unchanged",
    }
}

#[derive(Debug, Serialize)]
pub struct RunDoc {
    pub semantics: String,
    pub status: &'static str,
    pub policy: &'static str,
    pub seed: Option<u64>,
    pub input: DatabaseDoc,
    pub output: DatabaseDoc,
    pub chosen_model: Option<ModelDoc>,
    pub updates: Option<OutcomeDoc>,
    pub family: Option<FamilyDoc>,
}

impl RunDoc {
    pub fn of(r: &RunReport) -> Self {
        let (policy, seed) = match r.policy {
            SelectionPolicy::Lexicographic => ("lexicographic", None),
            SelectionPolicy::Seeded(seed) => ("seeded", Some(seed)),
        };
        Self {
            semantics: r.semantics.to_string(),
            status: status_name(r.status),
            policy,
            seed,
            input: DatabaseDoc::of(&r.input_db),
            output: DatabaseDoc::of(&r.output_db),
            chosen_model: r.chosen_model.as_ref().map(ModelDoc::of),
            updates: r.outcome.as_ref().map(OutcomeDoc::of),
            family: r.family_stats.map(FamilyDoc::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyMemberDoc {
    pub flags: Vec<&'static str>,
    pub undefined_count: usize,
    pub model: ModelDoc,
}

pub fn family_doc(family: &ModelFamily) -> Vec<FamilyMemberDoc> {
    family
        .iter()
        .map(|r| FamilyMemberDoc {
            flags: r.flags.labels().collect(),
            undefined_count: r.undefined_count,
            model: ModelDoc::of(&r.model),
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct ComparisonRowDoc {
    pub semantics: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub run: Option<RunDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ComparisonDoc {
    pub rows: Vec<ComparisonRowDoc>,
    /// `leq[i][j]`: output `i` is at most as informative as output `j`.
    pub leq: Vec<Vec<Option<bool>>>,
}

impl ComparisonDoc {
    pub fn of(c: &Comparison) -> Self {
        let rows = c
            .rows
            .iter()
            .map(|row| match &row.result {
                Ok(r) => ComparisonRowDoc { semantics: row.semantics.to_string(), run: Some(RunDoc::of(r)), error: None },
                Err(e) => ComparisonRowDoc { semantics: row.semantics.to_string(), run: None, error: Some(e.to_string()) },
            })
            .collect();
        Self { rows, leq: c.leq.clone() }
    }
}

pub fn to_json(doc: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
