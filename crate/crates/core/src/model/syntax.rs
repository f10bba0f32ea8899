//! Terms, atoms, literals and rules.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::names;

/// A simple term: a constant or a variable. Function symbols are not supported.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Const(String),
    Var(String),
}

impl Term {
    pub fn constant(symbol: impl Into<String>) -> Self {
        Term::Const(symbol.into())
    }

    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn as_const(&self) -> Option<&str> {
        match self {
            Term::Const(c) => Some(c),
            Term::Var(_) => None,
        }
    }
}

/// Whether a constant can be written without quotes.
pub fn is_bare_constant(symbol: &str) -> bool {
    let mut chars = symbol.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() || c.is_ascii_digit() => {}
        _ => return false,
    }
    chars.all(is_ident_char)
}

/// Characters allowed after the first character of an identifier.
pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) if is_bare_constant(c) => f.write_str(c),
            Term::Const(c) => {
                f.write_str("\"")?;
                for ch in c.chars() {
                    match ch {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        '\n' => f.write_str("\\n")?,
                        other => write!(f, "{other}")?,
                    }
                }
                f.write_str("\"")
            }
        }
    }
}

/// A standard atom `p(t1,...,tn)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Self { predicate: predicate.into(), args }
    }

    /// Builds a ground atom from constant symbols.
    pub fn ground<S: AsRef<str>>(predicate: impl Into<String>, consts: &[S]) -> Self {
        Self {
            predicate: predicate.into(),
            args: consts.iter().map(|c| Term::Const(String::from(c.as_ref()))).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|t| !t.is_var())
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v.as_str()),
            Term::Const(_) => None,
        })
    }

    pub fn with_predicate(&self, predicate: impl Into<String>) -> Atom {
        Atom { predicate: predicate.into(), args: self.args.clone() }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Insert,
    Delete,
}

impl Polarity {
    pub fn opposite(self) -> Self {
        match self {
            Polarity::Insert => Polarity::Delete,
            Polarity::Delete => Polarity::Insert,
        }
    }

    pub fn sign(self) -> char {
        match self {
            Polarity::Insert => '+',
            Polarity::Delete => '-',
        }
    }
}

/// `+A` or `-A` over a base atom `A`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UpdateAtom {
    pub polarity: Polarity,
    pub atom: Atom,
}

impl UpdateAtom {
    pub fn insert(atom: Atom) -> Self {
        Self { polarity: Polarity::Insert, atom }
    }

    pub fn delete(atom: Atom) -> Self {
        Self { polarity: Polarity::Delete, atom }
    }

    pub fn opposite(&self) -> Self {
        Self { polarity: self.polarity.opposite(), atom: self.atom.clone() }
    }

    /// The standard atom this update is read as once update predicates are
    /// renamed into the reserved namespace (`+p(t)` becomes `@plus_p(t)`).
    pub fn standardized(&self) -> Atom {
        self.atom.with_predicate(names::renamed_update(self.polarity, &self.atom.predicate))
    }
}

impl fmt::Display for UpdateAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.polarity.sign(), self.atom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Builtin {
    Eq,
    Neq,
}

impl Builtin {
    pub fn symbol(self) -> &'static str {
        match self {
            Builtin::Eq => "=",
            Builtin::Neq => "!=",
        }
    }

    /// Evaluates the comparison on two ground terms by constant identity.
    pub fn holds(self, left: &Term, right: &Term) -> bool {
        match self {
            Builtin::Eq => left == right,
            Builtin::Neq => left != right,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Literal {
    Std { positive: bool, atom: Atom },
    Upd { positive: bool, update: UpdateAtom },
    Builtin { op: Builtin, left: Term, right: Term },
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal::Std { positive: true, atom }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal::Std { positive: false, atom }
    }

    pub fn upd(positive: bool, update: UpdateAtom) -> Self {
        Literal::Upd { positive, update }
    }

    pub fn builtin(op: Builtin, left: Term, right: Term) -> Self {
        Literal::Builtin { op, left, right }
    }

    /// Positive standard or update literal; these bind variables.
    pub fn is_positive_atom(&self) -> bool {
        matches!(self, Literal::Std { positive: true, .. } | Literal::Upd { positive: true, .. })
    }

    /// The atom under the literal, if any (the base atom for update literals).
    pub fn atom(&self) -> Option<&Atom> {
        match self {
            Literal::Std { atom, .. } => Some(atom),
            Literal::Upd { update, .. } => Some(&update.atom),
            Literal::Builtin { .. } => None,
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        let (atom, left, right) = match self {
            Literal::Std { atom, .. } => (Some(atom), None, None),
            Literal::Upd { update, .. } => (Some(&update.atom), None, None),
            Literal::Builtin { left, right, .. } => (None, Some(left), Some(right)),
        };
        atom.into_iter().flat_map(|a| a.vars()).chain(
            [left, right].into_iter().flatten().filter_map(|t| match t {
                Term::Var(v) => Some(v.as_str()),
                Term::Const(_) => None,
            }),
        )
    }

    pub fn is_ground(&self) -> bool {
        self.vars().next().is_none()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Std { positive, atom } => {
                if !positive {
                    f.write_str("not ")?;
                }
                write!(f, "{atom}")
            }
            Literal::Upd { positive, update } => {
                if !positive {
                    f.write_str("not ")?;
                }
                write!(f, "{update}")
            }
            Literal::Builtin { op, left, right } => write!(f, "{left} {} {right}", op.symbol()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Head {
    Std(Atom),
    Upd(UpdateAtom),
}

impl Head {
    pub fn atom(&self) -> &Atom {
        match self {
            Head::Std(a) => a,
            Head::Upd(u) => &u.atom,
        }
    }

    /// Predicate symbol as written, with the update sign for active heads.
    pub fn symbol(&self) -> String {
        match self {
            Head::Std(a) => a.predicate.clone(),
            Head::Upd(u) => alloc::format!("{}{}", u.polarity.sign(), u.atom.predicate),
        }
    }
}

impl fmt::Display for Head {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Head::Std(a) => write!(f, "{a}"),
            Head::Upd(u) => write!(f, "{u}"),
        }
    }
}

/// Position of a rule in its source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Span {
    pub line: u32,
    pub column: u32,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// `head :- body.` The origin is carried for diagnostics and ignored by
/// equality and ordering.
#[derive(Clone, Debug)]
pub struct Rule {
    pub head: Head,
    pub body: Vec<Literal>,
    pub origin: Option<Span>,
}

impl Rule {
    pub fn new(head: Head, body: Vec<Literal>) -> Self {
        Self { head, body, origin: None }
    }

    pub fn fact(atom: Atom) -> Self {
        Self::new(Head::Std(atom), Vec::new())
    }

    pub fn with_origin(mut self, origin: Span) -> Self {
        self.origin = Some(origin);
        self
    }

    pub fn is_active(&self) -> bool {
        matches!(self.head, Head::Upd(_))
    }

    pub fn is_ground(&self) -> bool {
        self.head.atom().is_ground() && self.body.iter().all(Literal::is_ground)
    }

    pub fn vars(&self) -> BTreeSet<&str> {
        self.head.atom().vars().chain(self.body.iter().flat_map(Literal::vars)).collect()
    }

    /// Range restriction: every variable occurs in a positive non-builtin body
    /// literal. Returns the first offending variable.
    pub fn unsafe_var(&self) -> Option<String> {
        let bound: BTreeSet<&str> = self
            .body
            .iter()
            .filter(|l| l.is_positive_atom())
            .flat_map(Literal::vars)
            .collect();
        self.vars().into_iter().find(|v| !bound.contains(v)).map(String::from)
    }

    /// Text of the body as rendered, used as a sort key.
    pub fn body_text(&self) -> String {
        let mut s = String::new();
        for (i, l) in self.body.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&alloc::format!("{l}"));
        }
        s
    }

    /// Canonical ordering key: head predicate, body text, head text.
    pub fn sort_key(&self) -> (String, String, String) {
        (self.head.symbol(), self.body_text(), alloc::format!("{}", self.head))
    }
}

impl PartialEq for Rule {
    fn eq(&self, other: &Self) -> bool {
        self.head == other.head && self.body == other.body
    }
}

impl Eq for Rule {}

impl PartialOrd for Rule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rule {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.head, &self.body).cmp(&(&other.head, &other.body))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            write!(f, " :- {}", self.body_text())?;
        }
        f.write_str(".")
    }
}
