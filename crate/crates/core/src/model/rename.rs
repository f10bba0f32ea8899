use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::database::{Database, DeltaSet};
use super::interpretation::{Interpretation, ModelError};
use super::program::{Program, UpdateProgram};
use super::syntax::{Atom, Head, Literal, Rule, Term, UpdateAtom};

/// A bijection on constants. Constants without an entry map to themselves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstantMap {
    map: BTreeMap<String, String>,
}

impl ConstantMap {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Fails unless the map, extended by the identity, is injective.
    pub fn new(pairs: impl IntoIterator<Item = (String, String)>) -> Result<Self, ModelError> {
        let map: BTreeMap<String, String> = pairs.into_iter().collect();
        let this = Self { map };
        let mut seen = BTreeSet::new();
        let touched: BTreeSet<&String> = this.map.keys().chain(this.map.values()).collect();
        for c in touched {
            if !seen.insert(this.apply(c)) {
                return Err(ModelError::NotBijective { constant: c.clone() });
            }
        }
        Ok(this)
    }

    pub fn apply<'a>(&'a self, constant: &'a str) -> &'a str {
        self.map.get(constant).map(String::as_str).unwrap_or(constant)
    }

    pub fn inverse(&self) -> Self {
        Self { map: self.map.iter().map(|(k, v)| (v.clone(), k.clone())).collect() }
    }

    /// Whether every given constant is a fixpoint.
    pub fn fixes<'a>(&self, constants: impl IntoIterator<Item = &'a str>) -> bool {
        constants.into_iter().all(|c| self.apply(c) == c)
    }
}

/// Structures whose constants can be renamed.
pub trait Rename {
    fn rename(&self, map: &ConstantMap) -> Self;
}

impl Rename for Term {
    fn rename(&self, map: &ConstantMap) -> Self {
        match self {
            Term::Const(c) => Term::Const(String::from(map.apply(c))),
            Term::Var(v) => Term::Var(v.clone()),
        }
    }
}

impl Rename for Atom {
    fn rename(&self, map: &ConstantMap) -> Self {
        Atom {
            predicate: self.predicate.clone(),
            args: self.args.iter().map(|t| t.rename(map)).collect(),
        }
    }
}

impl Rename for UpdateAtom {
    fn rename(&self, map: &ConstantMap) -> Self {
        UpdateAtom { polarity: self.polarity, atom: self.atom.rename(map) }
    }
}

impl Rename for Literal {
    fn rename(&self, map: &ConstantMap) -> Self {
        match self {
            Literal::Std { positive, atom } => Literal::Std { positive: *positive, atom: atom.rename(map) },
            Literal::Upd { positive, update } => {
                Literal::Upd { positive: *positive, update: update.rename(map) }
            }
            Literal::Builtin { op, left, right } => {
                Literal::Builtin { op: *op, left: left.rename(map), right: right.rename(map) }
            }
        }
    }
}

impl Rename for Rule {
    fn rename(&self, map: &ConstantMap) -> Self {
        let head = match &self.head {
            Head::Std(a) => Head::Std(a.rename(map)),
            Head::Upd(u) => Head::Upd(u.rename(map)),
        };
        Rule { head, body: self.body.iter().map(|l| l.rename(map)).collect(), origin: self.origin }
    }
}

impl Rename for Program {
    fn rename(&self, map: &ConstantMap) -> Self {
        Program::from_rules_unchecked(self.rules().iter().map(|r| r.rename(map)).collect())
    }
}

impl Rename for Database {
    fn rename(&self, map: &ConstantMap) -> Self {
        let mut out = Database::new();
        for (a, s) in self.facts() {
            // a bijection keeps facts distinct and ground
            out.insert(a.rename(map), s).expect("renaming preserves database invariants");
        }
        out
    }
}

impl Rename for DeltaSet {
    fn rename(&self, map: &ConstantMap) -> Self {
        let updates: Vec<UpdateAtom> = self.iter().map(|u| u.rename(map)).collect();
        DeltaSet::from_updates(updates).expect("renaming preserves conflict freedom")
    }
}

impl Rename for UpdateProgram {
    fn rename(&self, map: &ConstantMap) -> Self {
        UpdateProgram { delta: self.delta.rename(map), program: self.program.rename(map) }
    }
}

impl Rename for Interpretation {
    fn rename(&self, map: &ConstantMap) -> Self {
        Interpretation::from_values(self.iter().map(|(a, v)| (a.rename(map), v)))
    }
}
