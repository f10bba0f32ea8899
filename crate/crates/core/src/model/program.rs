use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::database::DeltaSet;
use super::syntax::{Atom, Head, Literal, Rule, Span, Term};
use crate::names;

/// What a rule (or update set) does wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A variable is not bound by any positive non-builtin body literal.
    Unsafe { var: String },
    /// A user predicate uses the reserved `@` namespace.
    ReservedPredicate { predicate: String },
    /// An update atom over a derived predicate.
    UpdateOnDerived { predicate: String },
    /// A predicate used with two different arities.
    ArityMismatch { predicate: String, expected: usize, found: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Unsafe { var } => {
                write!(f, "variable {var} does not occur in a positive body literal")
            }
            Violation::ReservedPredicate { predicate } => {
                write!(f, "predicate {predicate} uses the reserved '@' prefix")
            }
            Violation::UpdateOnDerived { predicate } => {
                write!(f, "update atom over derived predicate {predicate}")
            }
            Violation::ArityMismatch { predicate, expected, found } => {
                write!(f, "predicate {predicate} used with arity {found}, expected {expected}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationError {
    /// The offending rule or update as text.
    pub subject: String,
    pub origin: Option<Span>,
    pub violation: Violation,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.origin {
            Some(span) => write!(f, "{span}: {}: {}", self.subject, self.violation),
            None => write!(f, "{}: {}", self.subject, self.violation),
        }
    }
}

impl core::error::Error for ValidationError {}

/// A set of deductive and active rules. Rule order is kept as given, but
/// equality treats the program as a set.
#[derive(Clone, Debug, Default)]
pub struct Program {
    rules: Vec<Rule>,
}

impl Program {
    /// Validates a user program: range restriction, reserved names, update
    /// atoms only over base predicates and consistent arities.
    pub fn new(rules: Vec<Rule>) -> Result<Self, ValidationError> {
        let program = Self { rules };
        program.validate()?;
        Ok(program)
    }

    /// Builds a program without validation (for generated programs).
    pub fn from_rules_unchecked(rules: Vec<Rule>) -> Self {
        Self { rules }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn into_rules(self) -> Vec<Rule> {
        self.rules
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// Active iff at least one rule has an update atom in its head.
    pub fn is_active(&self) -> bool {
        self.rules.iter().any(Rule::is_active)
    }

    /// Predicates that occur in the head of a deductive rule.
    pub fn derived_predicates(&self) -> BTreeSet<&str> {
        self.rules
            .iter()
            .filter_map(|r| match &r.head {
                Head::Std(a) => Some(a.predicate.as_str()),
                Head::Upd(_) => None,
            })
            .collect()
    }

    pub fn constants(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        for r in &self.rules {
            collect_rule_constants(r, &mut out);
        }
        out
    }

    /// Rules sorted into canonical order, duplicates removed.
    pub fn canonical_rules(&self) -> Vec<&Rule> {
        canonical_order(&self.rules)
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        let derived = self.derived_predicates();
        let mut arities = BTreeMap::new();
        for rule in &self.rules {
            let fail = |violation| ValidationError {
                subject: alloc::format!("{rule}"),
                origin: rule.origin,
                violation,
            };
            for atom in rule_atoms(rule) {
                if names::is_reserved(&atom.predicate) {
                    return Err(fail(Violation::ReservedPredicate {
                        predicate: atom.predicate.clone(),
                    }));
                }
                check_arity(&mut arities, atom).map_err(fail)?;
            }
            let updates = core::iter::once(&rule.head)
                .filter_map(|h| match h {
                    Head::Upd(u) => Some(&u.atom.predicate),
                    Head::Std(_) => None,
                })
                .chain(rule.body.iter().filter_map(|l| match l {
                    Literal::Upd { update, .. } => Some(&update.atom.predicate),
                    _ => None,
                }));
            for predicate in updates {
                if derived.contains(predicate.as_str()) {
                    return Err(fail(Violation::UpdateOnDerived { predicate: predicate.clone() }));
                }
            }
            if let Some(var) = rule.unsafe_var() {
                return Err(fail(Violation::Unsafe { var }));
            }
        }
        Ok(())
    }
}

pub(crate) fn canonical_order(rules: &[Rule]) -> Vec<&Rule> {
    let mut keyed: Vec<_> = rules.iter().map(|r| (r.sort_key(), r)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.1 == b.1);
    keyed.into_iter().map(|(_, r)| r).collect()
}

impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        let a: BTreeSet<&Rule> = self.rules.iter().collect();
        let b: BTreeSet<&Rule> = other.rules.iter().collect();
        a == b
    }
}

impl Eq for Program {}

/// Renders one rule per line in canonical order.
impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.canonical_rules() {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

pub(crate) fn rule_atoms(rule: &Rule) -> impl Iterator<Item = &Atom> {
    core::iter::once(rule.head.atom()).chain(rule.body.iter().filter_map(Literal::atom))
}

pub(crate) fn collect_rule_constants<'a>(rule: &'a Rule, out: &mut BTreeSet<&'a str>) {
    for atom in rule_atoms(rule) {
        out.extend(atom.args.iter().filter_map(Term::as_const));
    }
    for l in &rule.body {
        if let Literal::Builtin { left, right, .. } = l {
            out.extend([left, right].into_iter().filter_map(Term::as_const));
        }
    }
}

pub(crate) fn check_arity(
    arities: &mut BTreeMap<String, usize>,
    atom: &Atom,
) -> Result<(), Violation> {
    match arities.get(&atom.predicate) {
        Some(&expected) if expected != atom.arity() => Err(Violation::ArityMismatch {
            predicate: atom.predicate.clone(),
            expected,
            found: atom.arity(),
        }),
        Some(_) => Ok(()),
        None => {
            arities.insert(atom.predicate.clone(), atom.arity());
            Ok(())
        }
    }
}

/// An input update set together with the active program it triggers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UpdateProgram {
    pub delta: DeltaSet,
    pub program: Program,
}

impl UpdateProgram {
    /// Checks that the update set only touches base predicates, with the
    /// arities the program uses.
    pub fn new(delta: DeltaSet, program: Program) -> Result<Self, ValidationError> {
        let derived = program.derived_predicates();
        let mut arities = BTreeMap::new();
        for rule in program.rules() {
            for atom in rule_atoms(rule) {
                // already validated by Program::new; first arity wins
                arities.entry(atom.predicate.clone()).or_insert(atom.arity());
            }
        }
        for u in delta.iter() {
            let fail = |violation| ValidationError {
                subject: alloc::format!("{u}"),
                origin: None,
                violation,
            };
            if derived.contains(u.atom.predicate.as_str()) {
                return Err(fail(Violation::UpdateOnDerived { predicate: u.atom.predicate.clone() }));
            }
            check_arity(&mut arities, &u.atom).map_err(fail)?;
        }
        Ok(Self { delta, program })
    }

    /// Constants of the program and the update set.
    pub fn constants(&self) -> BTreeSet<&str> {
        let mut out = self.program.constants();
        for u in self.delta.iter() {
            out.extend(u.atom.args.iter().filter_map(Term::as_const));
        }
        out
    }
}
