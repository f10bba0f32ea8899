//! Seeded generators of random programs, databases and renamings.

use actlog_core::{Atom, ConstantMap, Database, FactStatus, GroundProgram, UpdateProgram};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::format;

pub use rand::SeedableRng;

pub type CaseRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CaseRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A propositional program over at most `max_atoms` atoms `p0`, `p1`, ...
pub fn ground_program(rng: &mut CaseRng, max_atoms: usize) -> GroundProgram {
    let n = rng.random_range(1..=max_atoms);
    let atom = |i: usize| Atom::ground(format!("p{i}"), &[] as &[&str]);
    let rules = rng.random_range(1..=2 * n + 2);
    let instances: Vec<_> = (0..rules)
        .map(|_| {
            let head = atom(rng.random_range(0..n));
            let pos = (0..rng.random_range(0..=2)).map(|_| atom(rng.random_range(0..n))).collect();
            let neg = (0..rng.random_range(0..=2)).map(|_| atom(rng.random_range(0..n))).collect();
            (head, pos, neg)
        })
        .collect();
    GroundProgram::from_instances(instances)
}

/// Size limits for [`update_case`].
#[derive(Clone, Debug)]
pub struct Shape {
    pub base_predicates: usize,
    pub derived_predicates: usize,
    pub max_arity: usize,
    pub max_rules: usize,
    /// Constants the rules and the update set may mention.
    pub program_constants: Vec<String>,
    /// Constants of the database.
    pub db_constants: Vec<String>,
    pub max_delta: usize,
}

impl Shape {
    /// Up to 3 base predicates of arity at most 2, 3 constants, 6 rules.
    pub fn small() -> Self {
        let constants: Vec<String> = (0..3).map(|i| format!("c{i}")).collect();
        Self {
            base_predicates: 3,
            derived_predicates: 1,
            max_arity: 2,
            max_rules: 6,
            program_constants: constants.clone(),
            db_constants: constants,
            max_delta: 3,
        }
    }

    /// Rules and updates mention only `c0`; the database ranges over
    /// `c0`..`c3`.
    pub fn generic() -> Self {
        Self {
            program_constants: vec!["c0".into()],
            db_constants: (0..4).map(|i| format!("c{i}")).collect(),
            ..Self::small()
        }
    }
}

struct Predicate {
    name: String,
    arity: usize,
}

const VARS: [&str; 2] = ["X", "Y"];

fn pick<'a, T>(rng: &mut CaseRng, xs: &'a [T]) -> &'a T {
    &xs[rng.random_range(0..xs.len())]
}

/// Arguments drawn from `terms`, preferring variables so that rules apply
/// to more than one tuple.
fn args(rng: &mut CaseRng, arity: usize, terms: &[String]) -> String {
    if arity == 0 {
        return String::new();
    }
    let vars: Vec<&String> = terms.iter().filter(|t| t.starts_with(char::is_uppercase)).collect();
    let args: Vec<&str> = (0..arity)
        .map(|_| match vars.is_empty() || rng.random_bool(0.3) {
            true => pick(rng, terms).as_str(),
            false => pick(rng, &vars).as_str(),
        })
        .collect();
    format!("({})", args.join(","))
}

/// One random safe rule as text. Head, negative and builtin literals only
/// use variables bound by the leading positive literals.
fn rule_text(rng: &mut CaseRng, base: &[Predicate], derived: &[Predicate], constants: &[String]) -> String {
    let any_term: Vec<String> = VARS.iter().map(|v| v.to_string()).chain(constants.iter().cloned()).collect();
    // `update` is the chance of an update atom over a base predicate
    let literal = |rng: &mut CaseRng, terms: &[String], update: f64| -> String {
        if !derived.is_empty() && rng.random_bool(0.2) {
            let p = pick(rng, derived);
            return format!("{}{}", p.name, args(rng, p.arity, terms));
        }
        let p = pick(rng, base);
        let sign = if rng.random_bool(update) { *pick(rng, &["+", "-"]) } else { "" };
        format!("{sign}{}{}", p.name, args(rng, p.arity, terms))
    };
    let mut body = Vec::new();
    for _ in 0..rng.random_range(1..=2) {
        body.push(literal(rng, &any_term, 0.5));
    }
    let bound: Vec<String> = VARS
        .iter()
        .filter(|v| body.iter().any(|l| l.contains(*v)))
        .map(|v| v.to_string())
        .chain(constants.iter().cloned())
        .collect();
    for _ in 0..rng.random_range(0..=2) {
        if rng.random_bool(0.6) {
            body.push(format!("not {}", literal(rng, &bound, 0.7)));
        } else {
            body.push(literal(rng, &bound, 0.5));
        }
    }
    if bound.len() > constants.len() && rng.random_bool(0.15) {
        body.push(format!("{} != {}", bound[0], pick(rng, constants)));
    }
    let head = if !derived.is_empty() && rng.random_bool(0.3) {
        let p = pick(rng, derived);
        format!("{}{}", p.name, args(rng, p.arity, &bound))
    } else {
        let p = pick(rng, base);
        let sign = *pick(rng, &["+", "-"]);
        format!("{sign}{}{}", p.name, args(rng, p.arity, &bound))
    };
    format!("{head} :- {}.", body.join(", "))
}

/// Two rules that block each other, which is what gives a program more
/// than one model.
fn choice_pair(rng: &mut CaseRng, base: &[Predicate], constants: &[String]) -> [String; 2] {
    let any_term: Vec<String> = VARS.iter().map(|v| v.to_string()).chain(constants.iter().cloned()).collect();
    let p = pick(rng, base);
    let sign = *pick(rng, &["", "+", "-"]);
    let trigger = format!("{sign}{}{}", p.name, args(rng, p.arity, &any_term));
    let bound: Vec<String> = VARS
        .iter()
        .filter(|v| trigger.contains(*v))
        .map(|v| v.to_string())
        .chain(constants.iter().cloned())
        .collect();
    let mut head = || {
        let p = pick(rng, base);
        format!("{}{}{}", pick(rng, &["+", "-"]), p.name, args(rng, p.arity, &bound))
    };
    let (h1, h2) = (head(), head());
    [format!("{h1} :- {trigger}, not {h2}."), format!("{h2} :- {trigger}, not {h1}.")]
}

fn tuples(arity: usize, constants: &[String]) -> Vec<Vec<&str>> {
    let mut out: Vec<Vec<&str>> = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| constants.iter().map(move |c| [t.clone(), vec![c.as_str()]].concat()))
            .collect();
    }
    out
}

/// A random update program with a random total database.
pub fn update_case(rng: &mut CaseRng, shape: &Shape) -> (UpdateProgram, Database) {
    loop {
        let base: Vec<Predicate> = (0..rng.random_range(1..=shape.base_predicates))
            .map(|i| Predicate { name: format!("b{i}"), arity: rng.random_range(0..=shape.max_arity) })
            .collect();
        let derived: Vec<Predicate> = (0..shape.derived_predicates)
            .map(|i| Predicate { name: format!("d{i}"), arity: rng.random_range(0..=shape.max_arity) })
            .collect();
        let mut rules = Vec::new();
        if rng.random_bool(0.4) {
            rules.extend(choice_pair(rng, &base, &shape.program_constants));
        }
        let target = rng.random_range(1..=shape.max_rules);
        while rules.len() < target {
            rules.push(rule_text(rng, &base, &derived, &shape.program_constants));
        }
        let mut delta = Vec::new();
        for _ in 0..rng.random_range(1..=shape.max_delta) {
            let p = pick(rng, &base);
            let sign = *pick(rng, &["+", "-"]);
            let update = format!("{sign}{}{}.", p.name, args(rng, p.arity, &shape.program_constants));
            let opposite = format!("{}{}", if sign == "+" { "-" } else { "+" }, &update[1..]);
            if !delta.contains(&opposite) && !delta.contains(&update) {
                delta.push(update);
            }
        }
        let Ok(up) = format::parse_update_program(&rules.join("\n"), &delta.join("\n")) else {
            continue;
        };
        let mut db = Database::new();
        for p in &base {
            for t in tuples(p.arity, &shape.db_constants) {
                if rng.random_bool(0.5) {
                    db.insert(Atom::ground(p.name.clone(), &t), FactStatus::True).expect("fresh fact");
                }
            }
        }
        return (up, db);
    }
}

/// A permutation of the database constants that fixes every program
/// constant.
pub fn renaming(rng: &mut CaseRng, shape: &Shape) -> ConstantMap {
    let free: Vec<&String> =
        shape.db_constants.iter().filter(|c| !shape.program_constants.contains(c)).collect();
    let mut image = free.clone();
    image.shuffle(rng);
    ConstantMap::new(free.into_iter().zip(image).map(|(a, b)| (a.clone(), b.clone())))
        .expect("a permutation is bijective")
}
