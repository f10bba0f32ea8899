use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use core::fmt;
use core::ops::Not;

use super::syntax::{Atom, Head, Literal, Rule};

/// Three truth values with `False < Undefined < True`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruthValue {
    False,
    Undefined,
    True,
}

impl Not for TruthValue {
    type Output = TruthValue;

    fn not(self) -> TruthValue {
        match self {
            TruthValue::False => TruthValue::True,
            TruthValue::Undefined => TruthValue::Undefined,
            TruthValue::True => TruthValue::False,
        }
    }
}

impl From<bool> for TruthValue {
    fn from(b: bool) -> Self {
        if b {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue::False => "false",
            TruthValue::Undefined => "undefined",
            TruthValue::True => "true",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    /// The atom is not part of the interpretation's universe.
    OutsideUniverse { atom: String },
    NotGround { item: String },
    /// An atom given as both true and false.
    Inconsistent { atom: String },
    /// The constant map is not a bijection.
    NotBijective { constant: String },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::OutsideUniverse { atom } => write!(f, "atom {atom} is outside the universe"),
            ModelError::NotGround { item } => write!(f, "{item} is not ground"),
            ModelError::Inconsistent { atom } => write!(f, "atom {atom} is both true and false"),
            ModelError::NotBijective { constant } => {
                write!(f, "constant map is not a bijection at {constant}")
            }
        }
    }
}

impl core::error::Error for ModelError {}

/// A consistent three-valued assignment over a finite universe of ground
/// atoms. Each atom has a single value, so no atom is both true and false.
///
/// Viewed as a literal set, the interpretation is `{A | A true} ∪ {not A | A
/// false}`; [`Interpretation::literal_subset`] is inclusion of those sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Interpretation {
    values: BTreeMap<Atom, TruthValue>,
}

impl Interpretation {
    /// Every atom of `universe` undefined.
    pub fn undefined(universe: impl IntoIterator<Item = Atom>) -> Self {
        Self { values: universe.into_iter().map(|a| (a, TruthValue::Undefined)).collect() }
    }

    /// Builds from a literal set; universe atoms in neither set are undefined.
    /// Literals outside the universe extend it.
    pub fn from_literals(
        universe: impl IntoIterator<Item = Atom>,
        positive: impl IntoIterator<Item = Atom>,
        negative: impl IntoIterator<Item = Atom>,
    ) -> Result<Self, ModelError> {
        let mut i = Self::undefined(universe);
        for a in positive {
            i.values.insert(a, TruthValue::True);
        }
        for a in negative {
            if i.values.get(&a) == Some(&TruthValue::True) {
                return Err(ModelError::Inconsistent { atom: alloc::format!("{a}") });
            }
            i.values.insert(a, TruthValue::False);
        }
        Ok(i)
    }

    pub fn from_values(values: impl IntoIterator<Item = (Atom, TruthValue)>) -> Self {
        Self { values: values.into_iter().collect() }
    }

    pub fn get(&self, atom: &Atom) -> Option<TruthValue> {
        self.values.get(atom).copied()
    }

    pub fn set(&mut self, atom: Atom, value: TruthValue) {
        self.values.insert(atom, value);
    }

    pub fn universe(&self) -> impl Iterator<Item = &Atom> {
        self.values.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, TruthValue)> {
        self.values.iter().map(|(a, v)| (a, *v))
    }

    pub fn with_value(&self, value: TruthValue) -> impl Iterator<Item = &Atom> {
        self.values.iter().filter(move |(_, v)| **v == value).map(|(a, _)| a)
    }

    pub fn positive(&self) -> impl Iterator<Item = &Atom> {
        self.with_value(TruthValue::True)
    }

    pub fn negative(&self) -> impl Iterator<Item = &Atom> {
        self.with_value(TruthValue::False)
    }

    pub fn undefined_atoms(&self) -> impl Iterator<Item = &Atom> {
        self.with_value(TruthValue::Undefined)
    }

    pub fn undefined_count(&self) -> usize {
        self.undefined_atoms().count()
    }

    pub fn is_total(&self) -> bool {
        self.undefined_atoms().next().is_none()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Inclusion of literal sets: every true (false) atom of `self` is true
    /// (false) in `other`.
    pub fn literal_subset(&self, other: &Interpretation) -> bool {
        self.values.iter().all(|(a, v)| match v {
            TruthValue::Undefined => true,
            v => other.get(a) == Some(*v),
        })
    }

    /// Whether the union of the two literal sets is consistent.
    pub fn consistent_with(&self, other: &Interpretation) -> bool {
        self.values.iter().all(|(a, v)| {
            !matches!(
                (v, other.get(a)),
                (TruthValue::True, Some(TruthValue::False)) | (TruthValue::False, Some(TruthValue::True))
            )
        })
    }

    /// Literal-set union over the union of universes, `None` if inconsistent.
    pub fn union(&self, other: &Interpretation) -> Option<Interpretation> {
        if !self.consistent_with(other) {
            return None;
        }
        let mut out = self.clone();
        for (a, v) in &other.values {
            let e = out.values.entry(a.clone()).or_insert(TruthValue::Undefined);
            if *v != TruthValue::Undefined {
                *e = *v;
            }
        }
        Some(out)
    }

    /// Literal-set intersection over the union of universes.
    pub fn intersection(&self, other: &Interpretation) -> Interpretation {
        let atoms: BTreeSet<&Atom> = self.values.keys().chain(other.values.keys()).collect();
        Interpretation {
            values: atoms
                .into_iter()
                .map(|a| {
                    let v = match (self.get(a), other.get(a)) {
                        (Some(x), Some(y)) if x == y => x,
                        _ => TruthValue::Undefined,
                    };
                    (a.clone(), v)
                })
                .collect(),
        }
    }

    /// Restricts the universe to atoms accepted by `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(&Atom) -> bool) -> Interpretation {
        Interpretation {
            values: self.values.iter().filter(|(a, _)| keep(a)).map(|(a, v)| (a.clone(), *v)).collect(),
        }
    }
}

/// `a. not b. c?` - true atoms end in `.`, false atoms are prefixed by `not`,
/// undefined atoms end in `?`; atoms in order, separated by single spaces.
impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, v)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match v {
                TruthValue::True => write!(f, "{a}.")?,
                TruthValue::False => write!(f, "not {a}.")?,
                TruthValue::Undefined => write!(f, "{a}?")?,
            }
        }
        Ok(())
    }
}

fn lookup(atom: &Atom, interp: &Interpretation) -> Result<TruthValue, ModelError> {
    if !atom.is_ground() {
        return Err(ModelError::NotGround { item: alloc::format!("{atom}") });
    }
    interp.get(atom).ok_or_else(|| ModelError::OutsideUniverse { atom: alloc::format!("{atom}") })
}

/// Truth value of a ground literal. Update literals are read through their
/// standardized atom (`+p(t)` as `@plus_p(t)`); builtins compare constants.
pub fn eval_literal(lit: &Literal, interp: &Interpretation) -> Result<TruthValue, ModelError> {
    match lit {
        Literal::Std { positive, atom } => {
            let v = lookup(atom, interp)?;
            Ok(if *positive { v } else { !v })
        }
        Literal::Upd { positive, update } => {
            let v = lookup(&update.standardized(), interp)?;
            Ok(if *positive { v } else { !v })
        }
        Literal::Builtin { op, left, right } => {
            if left.is_var() || right.is_var() {
                return Err(ModelError::NotGround { item: alloc::format!("{lit}") });
            }
            Ok(op.holds(left, right).into())
        }
    }
}

/// `I(head) >= min(I(body))`, the empty body counting as true.
pub fn rule_satisfied(rule: &Rule, interp: &Interpretation) -> Result<bool, ModelError> {
    let head = match &rule.head {
        Head::Std(a) => lookup(a, interp)?,
        Head::Upd(u) => lookup(&u.standardized(), interp)?,
    };
    let mut body = TruthValue::True;
    for l in &rule.body {
        body = body.min(eval_literal(l, interp)?);
    }
    Ok(head >= body)
}

/// Whether every rule of a ground program is satisfied.
pub fn is_model<'a>(
    rules: impl IntoIterator<Item = &'a Rule>,
    interp: &Interpretation,
) -> Result<bool, ModelError> {
    for r in rules {
        if !rule_satisfied(r, interp)? {
            return Ok(false);
        }
    }
    Ok(true)
}
