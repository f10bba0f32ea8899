use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use core::fmt;

use super::syntax::{Atom, Polarity, Term, UpdateAtom};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatabaseError {
    NonGround { atom: String },
    ArityMismatch { predicate: String, expected: usize, found: usize },
    /// The same fact given as both true and unknown.
    ConflictingStatus { atom: String },
    /// Both `+A` and `-A` in one update set.
    ConflictingUpdate { atom: String },
    ReservedPredicate { predicate: String },
}

impl fmt::Display for DatabaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatabaseError::NonGround { atom } => write!(f, "fact {atom} is not ground"),
            DatabaseError::ArityMismatch { predicate, expected, found } => {
                write!(f, "predicate {predicate} used with arity {found}, expected {expected}")
            }
            DatabaseError::ConflictingStatus { atom } => {
                write!(f, "fact {atom} is listed both as true and as unknown")
            }
            DatabaseError::ConflictingUpdate { atom } => {
                write!(f, "update set both inserts and deletes {atom}")
            }
            DatabaseError::ReservedPredicate { predicate } => {
                write!(f, "predicate {predicate} uses the reserved '@' prefix")
            }
        }
    }
}

impl core::error::Error for DatabaseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactStatus {
    True,
    Unknown,
}

fn check_atom(arities: &mut BTreeMap<String, usize>, atom: &Atom) -> Result<(), DatabaseError> {
    if !atom.is_ground() {
        return Err(DatabaseError::NonGround { atom: alloc::format!("{atom}") });
    }
    if crate::names::is_reserved(&atom.predicate) {
        return Err(DatabaseError::ReservedPredicate { predicate: atom.predicate.clone() });
    }
    match arities.get(&atom.predicate) {
        Some(&expected) if expected != atom.arity() => Err(DatabaseError::ArityMismatch {
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

/// A three-valued database: true facts and unknown facts, everything else is
/// false. A fact has exactly one status, so the true and unknown sets are
/// disjoint by construction.
#[derive(Clone, Debug, Default)]
pub struct Database {
    facts: BTreeMap<Atom, FactStatus>,
    arities: BTreeMap<String, usize>,
}

impl Database {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a fact. Re-adding with the same status is a no-op; a different
    /// status is an error.
    pub fn insert(&mut self, atom: Atom, status: FactStatus) -> Result<(), DatabaseError> {
        check_atom(&mut self.arities, &atom)?;
        match self.facts.get(&atom) {
            Some(&s) if s != status => {
                Err(DatabaseError::ConflictingStatus { atom: alloc::format!("{atom}") })
            }
            Some(_) => Ok(()),
            None => {
                self.facts.insert(atom, status);
                Ok(())
            }
        }
    }

    /// Sets the status of a fact, replacing any previous one. `None` makes the
    /// fact false.
    pub fn set(&mut self, atom: Atom, status: Option<FactStatus>) -> Result<(), DatabaseError> {
        check_atom(&mut self.arities, &atom)?;
        match status {
            Some(s) => {
                self.facts.insert(atom, s);
            }
            None => {
                self.facts.remove(&atom);
            }
        }
        Ok(())
    }

    pub fn from_facts(
        true_facts: impl IntoIterator<Item = Atom>,
        unknown_facts: impl IntoIterator<Item = Atom>,
    ) -> Result<Self, DatabaseError> {
        let mut db = Self::new();
        for a in true_facts {
            db.insert(a, FactStatus::True)?;
        }
        for a in unknown_facts {
            db.insert(a, FactStatus::Unknown)?;
        }
        Ok(db)
    }

    pub fn status(&self, atom: &Atom) -> Option<FactStatus> {
        self.facts.get(atom).copied()
    }

    pub fn is_true(&self, atom: &Atom) -> bool {
        self.status(atom) == Some(FactStatus::True)
    }

    pub fn is_unknown(&self, atom: &Atom) -> bool {
        self.status(atom) == Some(FactStatus::Unknown)
    }

    /// Not listed at all.
    pub fn is_false(&self, atom: &Atom) -> bool {
        self.status(atom).is_none()
    }

    pub fn facts(&self) -> impl Iterator<Item = (&Atom, FactStatus)> {
        self.facts.iter().map(|(a, s)| (a, *s))
    }

    pub fn true_facts(&self) -> impl Iterator<Item = &Atom> {
        self.facts.iter().filter(|(_, s)| **s == FactStatus::True).map(|(a, _)| a)
    }

    pub fn unknown_facts(&self) -> impl Iterator<Item = &Atom> {
        self.facts.iter().filter(|(_, s)| **s == FactStatus::Unknown).map(|(a, _)| a)
    }

    pub fn is_total(&self) -> bool {
        self.unknown_facts().next().is_none()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    /// Predicate arities seen so far.
    pub fn schema(&self) -> &BTreeMap<String, usize> {
        &self.arities
    }

    pub fn constants(&self) -> BTreeSet<&str> {
        self.facts.keys().flat_map(|a| a.args.iter().filter_map(Term::as_const)).collect()
    }
}

/// Two databases are equal when they hold the same facts with the same status.
impl PartialEq for Database {
    fn eq(&self, other: &Self) -> bool {
        self.facts == other.facts
    }
}

impl Eq for Database {}

/// True facts end in `.`, unknown facts in `?`, one per line in atom order.
impl fmt::Display for Database {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, s) in &self.facts {
            match s {
                FactStatus::True => writeln!(f, "{a}.")?,
                FactStatus::Unknown => writeln!(f, "{a}?")?,
            }
        }
        Ok(())
    }
}

/// Knowledge ordering: `d2` is at least as informative as `d1` when every
/// fact unknown in `d2` is also unknown in `d1`.
pub fn info_leq(d1: &Database, d2: &Database) -> Result<bool, DatabaseError> {
    for (p, &a1) in &d1.arities {
        if let Some(&a2) = d2.arities.get(p) {
            if a1 != a2 {
                return Err(DatabaseError::ArityMismatch {
                    predicate: p.clone(),
                    expected: a1,
                    found: a2,
                });
            }
        }
    }
    Ok(d2.unknown_facts().all(|a| d1.is_unknown(a)))
}

/// A ground, conflict-free set of update atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaSet {
    updates: BTreeSet<UpdateAtom>,
    arities: BTreeMap<String, usize>,
}

impl DeltaSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, update: UpdateAtom) -> Result<(), DatabaseError> {
        check_atom(&mut self.arities, &update.atom)?;
        if self.updates.contains(&update.opposite()) {
            return Err(DatabaseError::ConflictingUpdate { atom: alloc::format!("{}", update.atom) });
        }
        self.updates.insert(update);
        Ok(())
    }

    pub fn from_updates(updates: impl IntoIterator<Item = UpdateAtom>) -> Result<Self, DatabaseError> {
        let mut d = Self::new();
        for u in updates {
            d.insert(u)?;
        }
        Ok(d)
    }

    pub fn iter(&self) -> impl Iterator<Item = &UpdateAtom> {
        self.updates.iter()
    }

    pub fn of_polarity(&self, polarity: Polarity) -> impl Iterator<Item = &Atom> {
        self.updates.iter().filter(move |u| u.polarity == polarity).map(|u| &u.atom)
    }

    pub fn contains(&self, update: &UpdateAtom) -> bool {
        self.updates.contains(update)
    }

    pub fn is_empty(&self) -> bool {
        self.updates.is_empty()
    }

    pub fn len(&self) -> usize {
        self.updates.len()
    }
}

impl fmt::Display for DeltaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for u in &self.updates {
            writeln!(f, "{u}.")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(c: &str) -> Atom {
        Atom::ground("p", &[c])
    }

    #[test]
    fn conflicting_status_rejected() {
        let mut db = Database::new();
        db.insert(p("a"), FactStatus::True).unwrap();
        db.insert(p("a"), FactStatus::True).unwrap();
        assert!(matches!(
            db.insert(p("a"), FactStatus::Unknown),
            Err(DatabaseError::ConflictingStatus { .. })
        ));
    }

    #[test]
    fn non_ground_and_arity_rejected() {
        let mut db = Database::new();
        let open = Atom::new("p", vec![Term::var("X")]);
        assert!(matches!(db.insert(open, FactStatus::True), Err(DatabaseError::NonGround { .. })));
        db.insert(p("a"), FactStatus::True).unwrap();
        assert!(matches!(
            db.insert(Atom::ground("p", &["a", "b"]), FactStatus::True),
            Err(DatabaseError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn info_leq_cases() {
        let unknown = Database::from_facts([], [p("a")]).unwrap();
        let total = Database::from_facts([p("a")], []).unwrap();
        assert!(info_leq(&unknown, &total).unwrap());
        assert!(!info_leq(&total, &unknown).unwrap());
        assert!(info_leq(&unknown, &unknown).unwrap());
        let other = Database::from_facts([Atom::ground("p", &["a", "b"])], []).unwrap();
        assert!(info_leq(&total, &other).is_err());
    }

    #[test]
    fn delta_conflict() {
        let mut d = DeltaSet::new();
        d.insert(UpdateAtom::insert(p("a"))).unwrap();
        assert!(matches!(
            d.insert(UpdateAtom::delete(p("a"))),
            Err(DatabaseError::ConflictingUpdate { .. })
        ));
    }
}
