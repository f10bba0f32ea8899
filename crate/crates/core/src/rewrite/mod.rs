//! From update programs to ground Datalog programs with negation.
//!
//! [`rewrite_st`] is the guarded rewriting: active rules get a `not @ck_a`
//! guard, update atoms in bodies are read through bridge predicates that
//! also accept requests from the input update set, and the input update set
//! becomes `@ins_p`/`@del_p` facts. [`rewrite_bm`] is the complementary
//! rewriting that guards `+A` with `not -A` and turns input updates into
//! rules. [`embed_database`] adds the database and [`ground`] instantiates.

mod bm;
mod ground;
mod st;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use bm::rewrite_bm;
pub use ground::{ground, ground_with, AtomId, GroundError, GroundProgram, GroundRule, GroundingMode};
pub use st::rewrite_st;

use crate::model::{canonical_order, Atom, Database, FactStatus, Head, Literal, Polarity, Program, Rule, Term, UpdateAtom};
use crate::names::{self, PredicateRole};

/// A Datalog program with negation and builtins whose predicates may live in
/// the reserved namespace. It contains no update atoms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StandardProgram {
    rules: Vec<Rule>,
    provenance: BTreeMap<String, PredicateRole>,
}

impl StandardProgram {
    pub(crate) fn from_rules(rules: Vec<Rule>) -> Self {
        let mut provenance = BTreeMap::new();
        for r in &rules {
            debug_assert!(!matches!(r.head, Head::Upd(_)));
            for a in core::iter::once(r.head.atom()).chain(r.body.iter().filter_map(Literal::atom)) {
                provenance.entry(a.predicate.clone()).or_insert_with(|| names::classify(&a.predicate).0);
            }
        }
        Self { rules, provenance }
    }

    /// A plain Datalog program read as a standard program. Update atoms are
    /// renamed into the reserved namespace.
    pub fn from_program(program: &Program) -> Self {
        Self::from_rules(program.rules().iter().map(standardize_rule).collect())
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Where each predicate came from.
    pub fn provenance(&self) -> &BTreeMap<String, PredicateRole> {
        &self.provenance
    }

    pub fn role(&self, predicate: &str) -> Option<PredicateRole> {
        self.provenance.get(predicate).copied()
    }

    pub fn canonical_rules(&self) -> Vec<&Rule> {
        canonical_order(&self.rules)
    }

    pub fn constants(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        for r in &self.rules {
            crate::model::collect_rule_constants(r, &mut out);
        }
        out
    }

    /// Adds the database: a fact per true tuple and `p(t) :- not p(t).` per
    /// unknown tuple.
    pub fn embed(&self, db: &Database) -> StandardProgram {
        let mut rules = self.rules.clone();
        rules.extend(database_rules(db));
        Self::from_rules(rules)
    }
}

impl fmt::Display for StandardProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.canonical_rules() {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

fn database_rules(db: &Database) -> impl Iterator<Item = Rule> + '_ {
    db.facts().map(|(a, status)| match status {
        FactStatus::True => Rule::fact(a.clone()),
        FactStatus::Unknown => Rule::new(Head::Std(a.clone()), alloc::vec![Literal::neg(a.clone())]),
    })
}

/// `AP_D`: the program plus the database facts, with unknown facts encoded
/// as `p(t) :- not p(t).`
pub fn embed_database(program: &Program, db: &Database) -> Program {
    let mut rules = program.rules().to_vec();
    rules.extend(database_rules(db));
    Program::from_rules_unchecked(rules)
}

/// Replaces every update atom by its renamed standard atom.
pub(crate) fn standardize_rule(rule: &Rule) -> Rule {
    let head = match &rule.head {
        Head::Std(a) => Head::Std(a.clone()),
        Head::Upd(u) => Head::Std(u.standardized()),
    };
    let body = rule
        .body
        .iter()
        .map(|l| match l {
            Literal::Upd { positive, update } => {
                Literal::Std { positive: *positive, atom: update.standardized() }
            }
            other => other.clone(),
        })
        .collect();
    Rule { head, body, origin: rule.origin }
}

/// `pred(X1,...,Xn)`.
pub(crate) fn generic_atom(predicate: String, arity: usize) -> Atom {
    Atom::new(predicate, (1..=arity).map(|i| Term::var(alloc::format!("X{i}"))).collect())
}

pub(crate) fn renamed(polarity: Polarity, atom: &Atom) -> Atom {
    UpdateAtom { polarity, atom: atom.clone() }.standardized()
}
