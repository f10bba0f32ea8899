use alloc::vec::Vec;

use super::*;
use crate::model::{Head, Literal, Rule};
use crate::rewrite::{ground, StandardProgram};

fn atom(n: &str) -> Atom {
    Atom::new(n, Vec::new())
}

/// `"p :- b, ~p"` style propositional rules; `~` marks negation.
fn program(src: &[&str]) -> GroundProgram {
    let rules = src
        .iter()
        .map(|r| {
            let (head, body) = r.split_once(":-").unwrap_or((r, ""));
            let body = body
                .split(',')
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| match l.strip_prefix('~') {
                    Some(a) => Literal::neg(atom(a)),
                    None => Literal::pos(atom(l)),
                })
                .collect();
            Rule::new(Head::Std(atom(head.trim())), body)
        })
        .collect();
    ground(&StandardProgram::from_rules(rules)).unwrap()
}

/// Literal set over `universe`, e.g. `"a ~b"`.
fn interp(universe: &str, lits: &str) -> Interpretation {
    let mut i = Interpretation::undefined(universe.split_whitespace().map(atom));
    for l in lits.split_whitespace() {
        match l.strip_prefix('~') {
            Some(a) => i.set(atom(a), TruthValue::False),
            None => i.set(atom(l), TruthValue::True),
        }
    }
    i
}

fn partial_models() -> GroundProgram {
    program(&["a", "b :- ~c", "c :- ~b", "p :- b, ~p", "d :- a, ~p, ~e", "e :- a, ~p, ~d", "q :- ~d, ~q"])
}

fn partial_models_without_a() -> GroundProgram {
    program(&["b :- ~c", "c :- ~b", "p :- b, ~p", "d :- a, ~p, ~e", "e :- a, ~p, ~d", "q :- ~d, ~q"])
}

fn four_models() -> GroundProgram {
    program(&["a :- ~b", "b :- ~a", "c :- a", "c :- b", "c :- ~d", "d :- ~c"])
}

const UP: &str = "a b c d e p q";
const UF: &str = "a b c d";

fn set_of<'a>(it: impl Iterator<Item = &'a Interpretation>) -> BTreeSet<String> {
    it.map(|m| alloc::format!("{m}")).collect()
}

#[test]
fn partial_models_family() {
    let p = partial_models();
    let f = models(&p, &EnumerationConfig::default()).unwrap();
    let m: Vec<Interpretation> = ["a", "a b ~c", "a ~b c ~p", "a ~b c ~p ~d e", "a ~b c ~p d ~e ~q"]
        .iter()
        .map(|l| interp(UP, l))
        .collect();
    assert_eq!(set_of(f.models()), set_of(m.iter()));
    assert_eq!(f.well_founded(), Some(&m[0]));
    assert_eq!(well_founded(&p), m[0]);
    assert_eq!(set_of(f.with_flags(ModelFlags::M_STABLE)), set_of([&m[1], &m[3], &m[4]].into_iter()));
    assert_eq!(set_of(f.with_flags(ModelFlags::L_STABLE)), set_of([&m[4]].into_iter()));
    assert_eq!(set_of(f.with_flags(ModelFlags::T_STABLE)), set_of([&m[4]].into_iter()));
}

#[test]
fn partial_models_without_fact() {
    let p = partial_models_without_a();
    let f = models(&p, &EnumerationConfig::default()).unwrap();
    let m: Vec<Interpretation> = ["~a ~d ~e", "~a ~d ~e b ~c", "~a ~d ~e ~b c ~p"]
        .iter()
        .map(|l| interp(UP, l))
        .collect();
    assert_eq!(set_of(f.models()), set_of(m.iter()));
    assert_eq!(well_founded(&p), m[0]);
    assert_eq!(set_of(f.with_flags(ModelFlags::M_STABLE)), set_of([&m[1], &m[2]].into_iter()));
    assert_eq!(set_of(f.with_flags(ModelFlags::L_STABLE)), set_of([&m[2]].into_iter()));
    assert_eq!(f.count(ModelFlags::T_STABLE), 0);
    assert!(f.models().all(|m| m.get(&atom("q")) == Some(TruthValue::Undefined)));
}

#[test]
fn four_models_family() {
    let p = four_models();
    let f = models(&p, &EnumerationConfig::default()).unwrap();
    assert_eq!(f.len(), 4);
    assert_eq!(well_founded(&p), interp(UF, ""));
    let t: BTreeSet<String> = set_of([interp(UF, "a ~b c ~d"), interp(UF, "~a b c ~d")].iter());
    assert_eq!(set_of(f.with_flags(ModelFlags::T_STABLE)), t);
    assert_eq!(f.max_deterministic(), Some(&interp(UF, "c ~d")));
    assert_eq!(max_deterministic(&p, &EnumerationConfig::default()).unwrap(), interp(UF, "c ~d"));
    assert_eq!(f.count(ModelFlags::DETERMINISTIC), 2);
}

#[test]
fn reduct_examples() {
    let p = four_models();
    let m = interp(UF, "c ~d");
    let r = gl_reduct(&p, &m);
    assert_eq!(least_3v_model(&r), m);
    assert!(is_pstable(&p, &m));
    assert!(!is_pstable(&p, &interp(UF, "a ~b")));
    assert!(is_pstable(&p, &well_founded(&p)));

    let q = program(&["a :- ~b"]);
    let b_false = interp("a b", "~b");
    let r = gl_reduct(&q, &b_false);
    assert_eq!(r.rules[0].body, alloc::vec![ReductItem::Const(TruthValue::True)]);
    let b_undef = interp("a b", "");
    assert_eq!(gl_reduct(&q, &b_undef).rules[0].body, alloc::vec![ReductItem::Const(TruthValue::Undefined)]);
}

#[test]
fn operator_examples() {
    let q = program(&["a :- ~b"]);
    assert_eq!(immediate_consequence(&q, &interp("a b", "~b")), [atom("a")].into_iter().collect());
    assert!(immediate_consequence(&q, &interp("a b", "")).is_empty());
    assert!(immediate_consequence(&four_models(), &interp(UF, "")).is_empty());

    let selfloop = program(&["p :- p"]);
    assert_eq!(greatest_unfounded(&selfloop, &interp("p", "")), [atom("p")].into_iter().collect());
    // b occurs only in a body
    assert!(greatest_unfounded(&q, &interp("a b", "a")).contains(&atom("b")));

    let fact = program(&["a", "b :- c"]);
    assert_eq!(wf_step(&fact, &interp("a b c", "")).unwrap(), interp("a b c", "a ~b ~c"));
}

#[test]
fn wf_routes_agree() {
    for p in [partial_models(), partial_models_without_a(), four_models(), program(&["a", "b :- a, ~c", "c :- ~b, d", "d :- ~d"])] {
        assert_eq!(well_founded(&p), well_founded_alternating(&p));
    }
}

#[test]
fn search_matches_exhaustive() {
    for p in [partial_models(), partial_models_without_a(), four_models()] {
        let cfg = EnumerationConfig::default();
        assert_eq!(enumerate_pstable(&p, &cfg).unwrap(), enumerate_pstable_exhaustive(&p, &cfg).unwrap());
    }
}

#[test]
fn cap_is_enforced() {
    let p = four_models();
    let err = enumerate_pstable(&p, &EnumerationConfig { cap: 3 }).unwrap_err();
    assert_eq!(err, SemanticsError::CapExceeded { cap: 3, undefined: 4 });
}

#[test]
fn single_fact_has_all_flags() {
    let f = models(&program(&["a"]), &EnumerationConfig::default()).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f.records()[0].flags, ModelFlags::all());
}
