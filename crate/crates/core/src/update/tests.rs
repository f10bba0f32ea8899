use alloc::collections::BTreeSet;
use alloc::vec;

use super::*;
use crate::model::UpdateAtom;

fn a(p: &str, c: &str) -> Atom {
    Atom::ground(p, &[c])
}

fn set(atoms: &[Atom]) -> BTreeSet<Atom> {
    atoms.iter().cloned().collect()
}

fn db(true_facts: &[Atom], unknown: &[Atom]) -> Database {
    Database::from_facts(true_facts.iter().cloned(), unknown.iter().cloned()).unwrap()
}

#[test]
fn certain_delete_removes() {
    let u = UpdateOutcome::new(set(&[]), set(&[a("p", "a")]), set(&[]), set(&[])).unwrap();
    assert_eq!(apply_updates(&u, &db(&[a("p", "a")], &[])).unwrap(), Database::new());
}

#[test]
fn undefined_delete_of_true_fact() {
    let m = Atom::ground("mgr", &["x", "p", "d"]);
    let u = UpdateOutcome::new(set(&[]), set(&[]), set(&[]), set(&[m.clone()])).unwrap();
    assert_eq!(apply_updates(&u, &db(&[m.clone()], &[])).unwrap(), db(&[], &[m]));
}

#[test]
fn undefined_insert_of_false_fact() {
    let u = UpdateOutcome::new(set(&[]), set(&[]), set(&[a("emp", "a")]), set(&[])).unwrap();
    assert_eq!(apply_updates(&u, &Database::new()).unwrap(), db(&[], &[a("emp", "a")]));
    // a true fact is not touched by an undefined insert
    assert_eq!(apply_updates(&u, &db(&[a("emp", "a")], &[])).unwrap(), db(&[a("emp", "a")], &[]));
}

#[test]
fn unknown_facts_follow_certain_updates_only() {
    let p = a("p", "a");
    let ins = UpdateOutcome::new(set(&[p.clone()]), set(&[]), set(&[]), set(&[])).unwrap();
    assert_eq!(apply_updates(&ins, &db(&[], &[p.clone()])).unwrap(), db(&[p.clone()], &[]));
    let del = UpdateOutcome::new(set(&[]), set(&[p.clone()]), set(&[]), set(&[])).unwrap();
    assert_eq!(apply_updates(&del, &db(&[], &[p.clone()])).unwrap(), Database::new());
    let undef = UpdateOutcome::new(set(&[]), set(&[]), set(&[p.clone()]), set(&[p.clone()])).unwrap();
    assert_eq!(apply_updates(&undef, &db(&[], &[p.clone()])).unwrap(), db(&[], &[p]));
}

#[test]
fn inconsistent_outcomes_are_rejected() {
    let p = a("p", "a");
    assert!(UpdateOutcome::new(set(&[p.clone()]), set(&[p.clone()]), set(&[]), set(&[])).is_err());
    assert!(UpdateOutcome::new(set(&[p.clone()]), set(&[]), set(&[]), set(&[p.clone()])).is_err());
    assert!(UpdateOutcome::new(set(&[]), set(&[p.clone()]), set(&[p.clone()]), set(&[])).is_err());
    // both undefined is fine
    assert!(UpdateOutcome::new(set(&[]), set(&[]), set(&[p.clone()]), set(&[p])).is_ok());
}

#[test]
fn delta_application() {
    let proj = a("proj", "p");
    let delta = DeltaSet::from_updates([UpdateAtom::delete(proj.clone())]).unwrap();
    assert_eq!(apply_delta(&delta, &db(&[proj.clone()], &[])).unwrap(), Database::new());
    assert_eq!(apply_delta(&DeltaSet::new(), &db(&[proj.clone()], &[])).unwrap(), db(&[proj.clone()], &[]));
    let ins = DeltaSet::from_updates([UpdateAtom::insert(proj.clone())]).unwrap();
    assert_eq!(apply_delta(&ins, &db(&[], &[proj.clone()])).unwrap(), db(&[proj], &[]));
}

#[test]
fn extraction_reads_renamed_atoms() {
    let plus = UpdateAtom::insert(Atom::ground("mgr", &["x", "d"])).standardized();
    let minus = UpdateAtom::delete(Atom::ground("mgr", &["x", "d"])).standardized();
    let bridge = Atom::ground("@insb_mgr", &["x", "d"]);
    let m = Interpretation::from_values(vec![
        (plus, TruthValue::True),
        (minus, TruthValue::False),
        (bridge, TruthValue::True),
    ]);
    let u = extract_updates(&m).unwrap();
    assert_eq!(u.certain_insert(), &set(&[Atom::ground("mgr", &["x", "d"])]));
    assert!(u.certain_delete().is_empty() && u.undef_insert().is_empty() && u.undef_delete().is_empty());
}

#[test]
fn totality_test() {
    let plus_emp = UpdateAtom::insert(a("emp", "a")).standardized();
    let total = Interpretation::from_values(vec![(plus_emp.clone(), TruthValue::True)]);
    assert!(is_total_transformation(&total, &Database::new()));
    let undef = Interpretation::from_values(vec![(plus_emp, TruthValue::Undefined)]);
    assert!(is_total_transformation(&undef, &db(&[a("emp", "a")], &[])));
    assert!(!is_total_transformation(&undef, &Database::new()));
}

#[test]
fn semantics_names_round_trip() {
    for id in SemanticsId::ALL {
        assert_eq!(id.as_str().parse::<SemanticsId>().unwrap(), id);
    }
    assert_eq!("WS_BM".parse::<SemanticsId>().unwrap(), SemanticsId::WsBm);
}
