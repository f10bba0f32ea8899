//! Update outcomes carried by models and their application to databases,
//! plus the selectable update semantics.

mod engine;

use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;

pub use engine::{
    compare, run, Comparison, ComparisonRow, FamilyStats, RunConfig, RunReport, RunStatus,
    SelectionPolicy, SemanticsId,
};

use crate::model::{Atom, Database, DatabaseError, DeltaSet, FactStatus, Interpretation, Polarity, TruthValue};
use crate::names;
use crate::rewrite::GroundError;
use crate::semantics::SemanticsError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    /// The semantics only accepts total databases.
    NonTotalInput { semantics: SemanticsId },
    /// Insert and delete of the same atom where at least one is certain.
    InconsistentOutcome { atom: String },
    /// The totality test disagrees with the applied database.
    TotalityMismatch { semantics: SemanticsId },
    Ground(GroundError),
    Semantics(SemanticsError),
    Database(DatabaseError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::NonTotalInput { semantics } => {
                write!(f, "semantics {semantics} requires a total database")
            }
            EngineError::InconsistentOutcome { atom } => {
                write!(f, "inconsistent update set: insert and delete of {atom}")
            }
            EngineError::TotalityMismatch { semantics } => {
                write!(f, "internal error: totality test disagrees with the applied database under {semantics}")
            }
            EngineError::Ground(e) => e.fmt(f),
            EngineError::Semantics(e) => e.fmt(f),
            EngineError::Database(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for EngineError {}

impl From<GroundError> for EngineError {
    fn from(e: GroundError) -> Self {
        EngineError::Ground(e)
    }
}

impl From<SemanticsError> for EngineError {
    fn from(e: SemanticsError) -> Self {
        EngineError::Semantics(e)
    }
}

impl From<DatabaseError> for EngineError {
    fn from(e: DatabaseError) -> Self {
        EngineError::Database(e)
    }
}

/// Certain and undefined insertions and deletions of base atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UpdateOutcome {
    certain_insert: BTreeSet<Atom>,
    certain_delete: BTreeSet<Atom>,
    undef_insert: BTreeSet<Atom>,
    undef_delete: BTreeSet<Atom>,
}

impl UpdateOutcome {
    /// Rejects sets that are not conflict-free and consistent: a certain
    /// insert may not meet any delete of the same atom, and vice versa. An
    /// atom may not be both certain and undefined in one polarity.
    pub fn new(
        certain_insert: BTreeSet<Atom>,
        certain_delete: BTreeSet<Atom>,
        undef_insert: BTreeSet<Atom>,
        undef_delete: BTreeSet<Atom>,
    ) -> Result<Self, EngineError> {
        let clash = certain_insert
            .iter()
            .find(|a| certain_delete.contains(*a) || undef_delete.contains(*a) || undef_insert.contains(*a))
            .or_else(|| certain_delete.iter().find(|a| undef_insert.contains(*a) || undef_delete.contains(*a)));
        if let Some(a) = clash {
            return Err(EngineError::InconsistentOutcome { atom: alloc::format!("{a}") });
        }
        Ok(Self { certain_insert, certain_delete, undef_insert, undef_delete })
    }

    pub fn from_delta(delta: &DeltaSet) -> Self {
        Self {
            certain_insert: delta.of_polarity(Polarity::Insert).cloned().collect(),
            certain_delete: delta.of_polarity(Polarity::Delete).cloned().collect(),
            ..Self::default()
        }
    }

    pub fn certain_insert(&self) -> &BTreeSet<Atom> {
        &self.certain_insert
    }

    pub fn certain_delete(&self) -> &BTreeSet<Atom> {
        &self.certain_delete
    }

    pub fn undef_insert(&self) -> &BTreeSet<Atom> {
        &self.undef_insert
    }

    pub fn undef_delete(&self) -> &BTreeSet<Atom> {
        &self.undef_delete
    }

    pub fn is_empty(&self) -> bool {
        self.certain_insert.is_empty()
            && self.certain_delete.is_empty()
            && self.undef_insert.is_empty()
            && self.undef_delete.is_empty()
    }
}

/// Reads the `@plus_p`/`@minus_p` atoms of a model as updates of `p`. All
/// other atoms are ignored.
pub fn extract_updates(m: &Interpretation) -> Result<UpdateOutcome, EngineError> {
    let mut sets: [BTreeSet<Atom>; 4] = Default::default();
    for (atom, value) in m.iter() {
        let Some((polarity, base)) = names::as_renamed_update(&atom.predicate) else {
            continue;
        };
        let slot = match (polarity, value) {
            (_, TruthValue::False) => continue,
            (Polarity::Insert, TruthValue::True) => 0,
            (Polarity::Delete, TruthValue::True) => 1,
            (Polarity::Insert, TruthValue::Undefined) => 2,
            (Polarity::Delete, TruthValue::Undefined) => 3,
        };
        sets[slot].insert(atom.with_predicate(base));
    }
    let [ci, cd, ui, ud] = sets;
    UpdateOutcome::new(ci, cd, ui, ud)
}

/// Applies an outcome:
///
/// 1. `p` is true if `+p` is certain, or `p` was true and `-p` is false;
/// 2. `p` is unknown if (a) it was unknown and neither `+p` nor `-p` is
///    certain, (b) it was true and `-p` is undefined, or (c) it was false and
///    `+p` is undefined;
/// 3. everything else is false.
pub fn apply_updates(u: &UpdateOutcome, d: &Database) -> Result<Database, EngineError> {
    let mut out = Database::new();
    for (p, status) in d.facts() {
        let certain = u.certain_insert.contains(p) || u.certain_delete.contains(p);
        let next = match status {
            FactStatus::True if u.certain_delete.contains(p) => None,
            FactStatus::True if u.undef_delete.contains(p) && !u.certain_insert.contains(p) => {
                Some(FactStatus::Unknown)
            }
            FactStatus::True => Some(FactStatus::True),
            FactStatus::Unknown if u.certain_insert.contains(p) => Some(FactStatus::True),
            FactStatus::Unknown if certain => None,
            FactStatus::Unknown => Some(FactStatus::Unknown),
        };
        if let Some(s) = next {
            out.insert(p.clone(), s)?;
        }
    }
    for p in &u.certain_insert {
        out.set(p.clone(), Some(FactStatus::True))?;
    }
    for p in &u.undef_insert {
        if d.is_false(p) {
            out.insert(p.clone(), FactStatus::Unknown)?;
        }
    }
    Ok(out)
}

/// `δ(D)`: the input updates applied as certain updates.
pub fn apply_delta(delta: &DeltaSet, d: &Database) -> Result<Database, EngineError> {
    apply_updates(&UpdateOutcome::from_delta(delta), d)
}

/// Whether applying the updates of `m` to the total database `d` yields a
/// total database: `m` is total, or every undefined `+p` has `p` true in `d`
/// and every undefined `-p` has `p` false in `d`.
pub fn is_total_transformation(m: &Interpretation, d: &Database) -> bool {
    m.iter().all(|(atom, value)| {
        if value != TruthValue::Undefined {
            return true;
        }
        match names::as_renamed_update(&atom.predicate) {
            Some((Polarity::Insert, base)) => d.is_true(&atom.with_predicate(base)),
            Some((Polarity::Delete, base)) => d.is_false(&atom.with_predicate(base)),
            None => true,
        }
    })
}

#[cfg(test)]
mod tests;
