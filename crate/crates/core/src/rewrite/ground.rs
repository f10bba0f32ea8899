use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{standardize_rule, StandardProgram};
use crate::model::{Atom, Head, Literal, Rule, Term};

/// Index of a ground atom in a [`GroundProgram`]. Ids follow atom order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(pub u32);

impl AtomId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// `head :- pos..., not neg...` over atom ids. Bodies are sorted and
/// duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundRule {
    pub head: AtomId,
    pub pos: Vec<AtomId>,
    pub neg: Vec<AtomId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GroundingMode {
    /// Every substitution over the active constants.
    #[default]
    Full,
    /// Only instances whose positive body atoms are possibly derivable.
    Relevant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroundError {
    Unsafe { rule: String, var: String },
}

impl fmt::Display for GroundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundError::Unsafe { rule, var } => {
                write!(f, "cannot ground {rule}: variable {var} is not range restricted")
            }
        }
    }
}

impl core::error::Error for GroundError {}

/// A variable-free program without builtins over an interned atom universe:
/// the atoms mentioned by some rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundProgram {
    atoms: Vec<Atom>,
    index: BTreeMap<Atom, AtomId>,
    rules: Vec<GroundRule>,
    by_head: Vec<Vec<usize>>,
    pos_occurrences: Vec<Vec<usize>>,
}

impl GroundProgram {
    /// Interns ground rule instances `(head, positive body, negative body)`.
    pub fn from_instances(instances: impl IntoIterator<Item = (Atom, Vec<Atom>, Vec<Atom>)>) -> Self {
        let instances: BTreeSet<(Atom, BTreeSet<Atom>, BTreeSet<Atom>)> = instances
            .into_iter()
            .map(|(h, p, n)| (h, p.into_iter().collect(), n.into_iter().collect()))
            .collect();
        Self::intern(instances, BTreeSet::new())
    }

    fn intern(
        instances: BTreeSet<(Atom, BTreeSet<Atom>, BTreeSet<Atom>)>,
        extra_atoms: BTreeSet<Atom>,
    ) -> Self {
        let mut universe = extra_atoms;
        for (h, p, n) in &instances {
            universe.insert(h.clone());
            universe.extend(p.iter().cloned());
            universe.extend(n.iter().cloned());
        }
        let atoms: Vec<Atom> = universe.into_iter().collect();
        let index: BTreeMap<Atom, AtomId> =
            atoms.iter().enumerate().map(|(i, a)| (a.clone(), AtomId(i as u32))).collect();
        let id = |a: &Atom| index[a];
        let rules: Vec<GroundRule> = instances
            .iter()
            .map(|(h, p, n)| GroundRule {
                head: id(h),
                pos: p.iter().map(id).collect(),
                neg: n.iter().map(id).collect(),
            })
            .collect();
        let mut by_head = vec![Vec::new(); atoms.len()];
        let mut pos_occurrences = vec![Vec::new(); atoms.len()];
        for (i, r) in rules.iter().enumerate() {
            by_head[r.head.index()].push(i);
            for a in &r.pos {
                pos_occurrences[a.index()].push(i);
            }
        }
        Self { atoms, index, rules, by_head, pos_occurrences }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom(&self, id: AtomId) -> &Atom {
        &self.atoms[id.index()]
    }

    pub fn id(&self, atom: &Atom) -> Option<AtomId> {
        self.index.get(atom).copied()
    }

    pub fn rules(&self) -> &[GroundRule] {
        &self.rules
    }

    pub fn len_atoms(&self) -> usize {
        self.atoms.len()
    }

    /// Rules with the given head.
    pub fn rules_for(&self, head: AtomId) -> impl Iterator<Item = &GroundRule> {
        self.by_head[head.index()].iter().map(|&i| &self.rules[i])
    }

    /// Indices of rules with the atom in their positive body.
    pub(crate) fn positive_occurrences(&self, atom: AtomId) -> &[usize] {
        &self.pos_occurrences[atom.index()]
    }

    pub fn to_rule(&self, rule: &GroundRule) -> Rule {
        let body = rule
            .pos
            .iter()
            .map(|a| Literal::pos(self.atom(*a).clone()))
            .chain(rule.neg.iter().map(|a| Literal::neg(self.atom(*a).clone())))
            .collect();
        Rule::new(Head::Std(self.atom(rule.head).clone()), body)
    }
}

impl fmt::Display for GroundProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<Rule> = self.rules.iter().map(|r| self.to_rule(r)).collect();
        for r in crate::model::canonical_order(&rules) {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Grounds with [`GroundingMode::Full`].
pub fn ground(program: &StandardProgram) -> Result<GroundProgram, GroundError> {
    ground_with(program, GroundingMode::Full)
}

/// Instantiates every rule over the constants of the program. Builtins are
/// evaluated: instances where one fails are dropped, the others lose their
/// builtin literals. In [`GroundingMode::Relevant`] instances with a positive
/// body atom that no rule can derive are dropped as well.
pub fn ground_with(program: &StandardProgram, mode: GroundingMode) -> Result<GroundProgram, GroundError> {
    let rules: Vec<Rule> = program.rules().iter().map(standardize_rule).collect();
    for r in &rules {
        if let Some(var) = r.unsafe_var() {
            return Err(GroundError::Unsafe { rule: alloc::format!("{r}"), var });
        }
    }
    let mut instances = BTreeSet::new();
    match mode {
        GroundingMode::Full => {
            let constants: Vec<&str> = program.constants().into_iter().collect();
            for r in &rules {
                let vars: Vec<&str> = r.vars().into_iter().collect();
                let mut choice = vec![0usize; vars.len()];
                if !vars.is_empty() && constants.is_empty() {
                    continue;
                }
                loop {
                    let binding: BTreeMap<&str, &str> =
                        vars.iter().zip(&choice).map(|(v, &c)| (*v, constants[c])).collect();
                    if let Some(inst) = instantiate(r, &binding) {
                        instances.insert(inst);
                    }
                    if !next_choice(&mut choice, constants.len()) {
                        break;
                    }
                }
            }
        }
        GroundingMode::Relevant => {
            let mut possible: BTreeMap<String, BTreeSet<Atom>> = BTreeMap::new();
            loop {
                let mut fresh = Vec::new();
                for r in &rules {
                    for_each_match(r, &possible, &mut |binding| {
                        if let Some((head, _, _)) = instantiate(r, binding) {
                            let known = possible.get(&head.predicate).is_some_and(|s| s.contains(&head));
                            if !known {
                                fresh.push(head);
                            }
                        }
                    });
                }
                if fresh.is_empty() {
                    break;
                }
                for a in fresh {
                    possible.entry(a.predicate.clone()).or_default().insert(a);
                }
            }
            for r in &rules {
                for_each_match(r, &possible, &mut |binding| {
                    if let Some(inst) = instantiate(r, binding) {
                        instances.insert(inst);
                    }
                });
            }
        }
    }
    Ok(GroundProgram::intern(instances, BTreeSet::new()))
}

fn next_choice(choice: &mut [usize], base: usize) -> bool {
    for c in choice.iter_mut() {
        *c += 1;
        if *c < base {
            return true;
        }
        *c = 0;
    }
    false
}

fn substitute(atom: &Atom, binding: &BTreeMap<&str, &str>) -> Atom {
    Atom {
        predicate: atom.predicate.clone(),
        args: atom.args.iter().map(|t| substitute_term(t, binding)).collect(),
    }
}

fn substitute_term(term: &Term, binding: &BTreeMap<&str, &str>) -> Term {
    match term {
        Term::Var(v) => Term::Const(String::from(binding[v.as_str()])),
        c => c.clone(),
    }
}

type Instance = (Atom, BTreeSet<Atom>, BTreeSet<Atom>);

/// Applies a total binding; `None` when a builtin fails.
fn instantiate(rule: &Rule, binding: &BTreeMap<&str, &str>) -> Option<Instance> {
    let mut pos = BTreeSet::new();
    let mut neg = BTreeSet::new();
    for l in &rule.body {
        match l {
            Literal::Std { positive: true, atom } => {
                pos.insert(substitute(atom, binding));
            }
            Literal::Std { positive: false, atom } => {
                neg.insert(substitute(atom, binding));
            }
            Literal::Builtin { op, left, right } => {
                if !op.holds(&substitute_term(left, binding), &substitute_term(right, binding)) {
                    return None;
                }
            }
            Literal::Upd { .. } => unreachable!("rules are standardized before grounding"),
        }
    }
    Some((substitute(rule.head.atom(), binding), pos, neg))
}

/// Enumerates bindings of the rule's variables that map every positive body
/// atom into `possible`.
fn for_each_match<'r>(
    rule: &'r Rule,
    possible: &'r BTreeMap<String, BTreeSet<Atom>>,
    f: &mut dyn FnMut(&BTreeMap<&'r str, &'r str>),
) {
    let positives: Vec<&Atom> = rule
        .body
        .iter()
        .filter_map(|l| match l {
            Literal::Std { positive: true, atom } => Some(atom),
            _ => None,
        })
        .collect();
    let mut binding = BTreeMap::new();
    join(&positives, possible, &mut binding, f);
}

fn join<'r>(
    pending: &[&'r Atom],
    possible: &'r BTreeMap<String, BTreeSet<Atom>>,
    binding: &mut BTreeMap<&'r str, &'r str>,
    f: &mut dyn FnMut(&BTreeMap<&'r str, &'r str>),
) {
    let Some((first, rest)) = pending.split_first() else {
        f(binding);
        return;
    };
    let Some(candidates) = possible.get(&first.predicate) else {
        return;
    };
    'facts: for fact in candidates {
        if fact.arity() != first.arity() {
            continue;
        }
        let mut added = Vec::new();
        for (pattern, value) in first.args.iter().zip(&fact.args) {
            let value = value.as_const().expect("possible atoms are ground");
            match pattern {
                Term::Const(c) if c != value => {
                    undo(binding, &added);
                    continue 'facts;
                }
                Term::Const(_) => {}
                Term::Var(v) => match binding.get(v.as_str()) {
                    Some(&bound) if bound != value => {
                        undo(binding, &added);
                        continue 'facts;
                    }
                    Some(_) => {}
                    None => {
                        binding.insert(v.as_str(), value);
                        added.push(v.as_str());
                    }
                },
            }
        }
        join(rest, possible, binding, f);
        undo(binding, &added);
    }
}

fn undo<'r>(binding: &mut BTreeMap<&'r str, &'r str>, added: &[&'r str]) {
    for v in added {
        binding.remove(v);
    }
}
