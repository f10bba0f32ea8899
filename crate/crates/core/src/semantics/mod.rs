//! Three-valued model theory of ground programs: immediate consequences,
//! unfounded sets, the well-founded model, GL-reducts, P-stable models and
//! their classification.

mod enumerate;
mod fixpoint;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use bitflags::bitflags;

use crate::model::{Atom, Interpretation, TruthValue};
use crate::rewrite::{AtomId, GroundProgram};
use fixpoint::{interpretation_of, values_of};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemanticsError {
    /// `W_P` produced an atom that is both true and false.
    Inconsistent { atom: String },
    /// More undefined atoms in the well-founded model than the cap allows.
    CapExceeded { cap: usize, undefined: usize },
    /// The deterministic models have no greatest element.
    NoMaxDeterministic,
}

impl fmt::Display for SemanticsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemanticsError::Inconsistent { atom } => {
                write!(f, "internal error: {atom} is both derived and unfounded")
            }
            SemanticsError::CapExceeded { cap, undefined } => write!(
                f,
                "well-founded model leaves {undefined} atoms undefined, above the enumeration cap of {cap}"
            ),
            SemanticsError::NoMaxDeterministic => {
                f.write_str("internal error: deterministic models have no greatest element")
            }
        }
    }
}

impl core::error::Error for SemanticsError {}

/// Heads of rules whose body is true in `i`.
pub fn immediate_consequence(p: &GroundProgram, i: &Interpretation) -> BTreeSet<Atom> {
    selected(p, &fixpoint::consequences(p, &values_of(p, i)))
}

/// The greatest unfounded set of `p` with respect to `i`.
pub fn greatest_unfounded(p: &GroundProgram, i: &Interpretation) -> BTreeSet<Atom> {
    selected(p, &fixpoint::unfounded(p, &values_of(p, i)))
}

fn selected(p: &GroundProgram, mask: &[bool]) -> BTreeSet<Atom> {
    mask.iter().zip(p.atoms()).filter(|(m, _)| **m).map(|(_, a)| a.clone()).collect()
}

/// `W_P(I) = T_P(I) ∪ ¬U_P(I)` over the atoms of `p`.
pub fn wf_step(p: &GroundProgram, i: &Interpretation) -> Result<Interpretation, SemanticsError> {
    fixpoint::step(p, &values_of(p, i))
        .map(|v| interpretation_of(p, &v))
        .map_err(|a| SemanticsError::Inconsistent { atom: alloc::format!("{}", p.atom(a)) })
}

/// Least fixpoint of [`wf_step`].
pub fn well_founded(p: &GroundProgram) -> Interpretation {
    interpretation_of(p, &fixpoint::well_founded(p))
}

/// The well-founded model computed as the alternating fixpoint of the
/// Gelfond-Lifschitz operator.
pub fn well_founded_alternating(p: &GroundProgram) -> Interpretation {
    interpretation_of(p, &fixpoint::alternating(p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ReductItem {
    Atom(AtomId),
    Const(TruthValue),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductRule {
    pub head: AtomId,
    pub body: Vec<ReductItem>,
}

/// A positive program whose bodies mix atoms and truth value constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductProgram {
    pub atoms: Vec<Atom>,
    pub rules: Vec<ReductRule>,
}

/// Replaces each `not A` by the constant `¬M(A)`.
pub fn gl_reduct(p: &GroundProgram, m: &Interpretation) -> ReductProgram {
    let v = values_of(p, m);
    let rules = p
        .rules()
        .iter()
        .map(|r| ReductRule {
            head: r.head,
            body: r
                .pos
                .iter()
                .map(|a| ReductItem::Atom(*a))
                .chain(r.neg.iter().map(|a| ReductItem::Const(!v[a.index()])))
                .collect(),
        })
        .collect();
    ReductProgram { atoms: p.atoms().to_vec(), rules }
}

/// Least three-valued model: iterate from all-false, giving each head the
/// maximum over its rules of the minimum of the body.
pub fn least_3v_model(r: &ReductProgram) -> Interpretation {
    let mut v = alloc::vec![TruthValue::False; r.atoms.len()];
    loop {
        let mut changed = false;
        for rule in &r.rules {
            let body = rule
                .body
                .iter()
                .map(|item| match item {
                    ReductItem::Atom(a) => v[a.index()],
                    ReductItem::Const(c) => *c,
                })
                .fold(TruthValue::True, TruthValue::min);
            if body > v[rule.head.index()] {
                v[rule.head.index()] = body;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Interpretation::from_values(r.atoms.iter().cloned().zip(v))
}

/// Whether `m` is the least model of its own reduct. Atoms of `m` outside
/// the program must be false; program atoms missing from `m` count as
/// undefined.
pub fn is_pstable(p: &GroundProgram, m: &Interpretation) -> bool {
    let outside_false = m.iter().all(|(a, v)| p.id(a).is_some() || v == TruthValue::False);
    let v = values_of(p, m);
    outside_false && fixpoint::reduct_least(p, &v) == v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Largest number of atoms left undefined by the well-founded model.
    pub cap: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self { cap: 20 }
    }
}

bitflags! {
    #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
    pub struct ModelFlags: u8 {
        const WELL_FOUNDED = 1;
        const T_STABLE = 1 << 1;
        const M_STABLE = 1 << 2;
        const L_STABLE = 1 << 3;
        const DETERMINISTIC = 1 << 4;
        const MAX_DETERMINISTIC = 1 << 5;
    }
}

impl ModelFlags {
    pub const LABELS: [(ModelFlags, &'static str); 6] = [
        (ModelFlags::WELL_FOUNDED, "well-founded"),
        (ModelFlags::T_STABLE, "t-stable"),
        (ModelFlags::M_STABLE, "m-stable"),
        (ModelFlags::L_STABLE, "l-stable"),
        (ModelFlags::DETERMINISTIC, "deterministic"),
        (ModelFlags::MAX_DETERMINISTIC, "max-deterministic"),
    ];

    pub fn labels(self) -> impl Iterator<Item = &'static str> {
        Self::LABELS.into_iter().filter(move |(f, _)| self.contains(*f)).map(|(_, l)| l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelRecord {
    pub model: Interpretation,
    pub flags: ModelFlags,
    pub undefined_count: usize,
}

/// Distinct P-stable models sorted by their rendering.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModelFamily {
    records: Vec<ModelRecord>,
}

impl ModelFamily {
    /// Sorts and deduplicates; flags start empty.
    pub fn from_models(models: impl IntoIterator<Item = Interpretation>) -> Self {
        let mut keyed: Vec<(String, Interpretation)> =
            models.into_iter().map(|m| (alloc::format!("{m}"), m)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        let records = keyed
            .into_iter()
            .map(|(_, model)| ModelRecord {
                undefined_count: model.undefined_count(),
                model,
                flags: ModelFlags::empty(),
            })
            .collect();
        Self { records }
    }

    pub fn records(&self) -> &[ModelRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ModelRecord> {
        self.records.iter()
    }

    pub fn models(&self) -> impl Iterator<Item = &Interpretation> {
        self.records.iter().map(|r| &r.model)
    }

    /// Models carrying every flag in `flags`, in family order.
    pub fn with_flags(&self, flags: ModelFlags) -> impl Iterator<Item = &Interpretation> {
        self.records.iter().filter(move |r| r.flags.contains(flags)).map(|r| &r.model)
    }

    pub fn count(&self, flags: ModelFlags) -> usize {
        self.with_flags(flags).count()
    }

    pub fn well_founded(&self) -> Option<&Interpretation> {
        self.with_flags(ModelFlags::WELL_FOUNDED).next()
    }

    pub fn max_deterministic(&self) -> Option<&Interpretation> {
        self.with_flags(ModelFlags::MAX_DETERMINISTIC).next()
    }
}

fn wf_values(p: &GroundProgram, cfg: &EnumerationConfig) -> Result<Vec<TruthValue>, SemanticsError> {
    let wf = fixpoint::well_founded(p);
    let undefined = wf.iter().filter(|v| **v == TruthValue::Undefined).count();
    if undefined > cfg.cap {
        return Err(SemanticsError::CapExceeded { cap: cfg.cap, undefined });
    }
    Ok(wf)
}

/// All P-stable models, found by bounded search over the atoms the
/// well-founded model leaves undefined. Flags are left empty; see
/// [`classify`].
pub fn enumerate_pstable(p: &GroundProgram, cfg: &EnumerationConfig) -> Result<ModelFamily, SemanticsError> {
    let wf = wf_values(p, cfg)?;
    let found = enumerate::search(p, &wf);
    Ok(ModelFamily::from_models(found.iter().map(|v| interpretation_of(p, v))))
}

/// Same result as [`enumerate_pstable`] by testing all `3^k` extensions of
/// the well-founded model.
pub fn enumerate_pstable_exhaustive(
    p: &GroundProgram,
    cfg: &EnumerationConfig,
) -> Result<ModelFamily, SemanticsError> {
    let wf = wf_values(p, cfg)?;
    let found = enumerate::exhaustive(p, &wf);
    Ok(ModelFamily::from_models(found.iter().map(|v| interpretation_of(p, v))))
}

/// Sets the flags of every model of a complete family of P-stable models.
///
/// M-stable models are the literal-set maximal ones, L-stable models the
/// M-stable ones whose undefined set is inclusion minimal among M-stable
/// models, deterministic models those consistent with every model of the
/// family, and the max-deterministic model the greatest deterministic one.
pub fn classify(p: &GroundProgram, family: ModelFamily) -> Result<ModelFamily, SemanticsError> {
    let wf = well_founded(p);
    let mut records = family.records;
    let models: Vec<Interpretation> = records.iter().map(|r| r.model.clone()).collect();
    let undefined: Vec<BTreeSet<&Atom>> = models.iter().map(|m| m.undefined_atoms().collect()).collect();
    let n = models.len();
    let m_stable: Vec<bool> = (0..n)
        .map(|i| !(0..n).any(|j| j != i && models[i].literal_subset(&models[j])))
        .collect();
    for i in 0..n {
        let mut flags = ModelFlags::empty();
        if models[i] == wf {
            flags |= ModelFlags::WELL_FOUNDED;
        }
        if models[i].is_total() {
            flags |= ModelFlags::T_STABLE;
        }
        if m_stable[i] {
            flags |= ModelFlags::M_STABLE;
            let dominated = (0..n).any(|j| m_stable[j] && undefined[j] != undefined[i] && undefined[j].is_subset(&undefined[i]));
            if !dominated {
                flags |= ModelFlags::L_STABLE;
            }
        }
        if models.iter().all(|other| models[i].consistent_with(other)) {
            flags |= ModelFlags::DETERMINISTIC;
        }
        records[i].flags = flags;
    }
    let deterministic: Vec<usize> = (0..n).filter(|&i| records[i].flags.contains(ModelFlags::DETERMINISTIC)).collect();
    let top = deterministic
        .iter()
        .copied()
        .find(|&i| deterministic.iter().all(|&j| models[j].literal_subset(&models[i])))
        .ok_or(SemanticsError::NoMaxDeterministic)?;
    records[top].flags |= ModelFlags::MAX_DETERMINISTIC;
    Ok(ModelFamily { records })
}

/// [`enumerate_pstable`] followed by [`classify`].
pub fn models(p: &GroundProgram, cfg: &EnumerationConfig) -> Result<ModelFamily, SemanticsError> {
    classify(p, enumerate_pstable(p, cfg)?)
}

pub fn max_deterministic(p: &GroundProgram, cfg: &EnumerationConfig) -> Result<Interpretation, SemanticsError> {
    let family = models(p, cfg)?;
    Ok(family.max_deterministic().cloned().expect("classify marks a max-deterministic model"))
}

#[cfg(test)]
mod tests;
