use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{generic_atom, StandardProgram};
use crate::model::{Head, Literal, Polarity, Rule, UpdateProgram};
use crate::names;

/// Guarded rewriting of an update program into a standard program.
///
/// * deductive rules are copied;
/// * an active rule `±a(t) :- B` becomes `@plus_a(t)` / `@minus_a(t) :- B,
///   not @ck_a(t)`;
/// * every body update atom `+p(t)` (`-p(t)`), positive or negated, is read
///   through the bridge `@insb_p(t)` (`@delb_p(t)`), defined by
///   `@insb_p(X) :- @plus_p(X).` and `@insb_p(X) :- @ins_p(X).`;
/// * each guarded action `a/n` gets `@ck_a(X1..Xn) :- @plus_a(X1..Xn),
///   @minus_a(X1..Xn).`;
/// * each input update `+p(t)` (`-p(t)`) becomes the fact `@ins_p(t)`
///   (`@del_p(t)`).
pub fn rewrite_st(up: &UpdateProgram) -> StandardProgram {
    let mut rules = Vec::new();
    let mut bridges: BTreeMap<(Polarity, String), usize> = BTreeMap::new();
    let mut guarded: BTreeMap<String, usize> = BTreeMap::new();

    for rule in up.program.rules() {
        let mut body: Vec<Literal> = rule
            .body
            .iter()
            .map(|l| match l {
                Literal::Upd { positive, update } => {
                    let pred = &update.atom.predicate;
                    bridges.insert((update.polarity, pred.clone()), update.atom.arity());
                    Literal::Std {
                        positive: *positive,
                        atom: update.atom.with_predicate(names::bridge(update.polarity, pred)),
                    }
                }
                other => other.clone(),
            })
            .collect();
        let head = match &rule.head {
            Head::Std(a) => Head::Std(a.clone()),
            Head::Upd(u) => {
                let pred = &u.atom.predicate;
                guarded.insert(pred.clone(), u.atom.arity());
                body.push(Literal::neg(u.atom.with_predicate(names::guard(pred))));
                Head::Std(u.standardized())
            }
        };
        rules.push(Rule { head, body, origin: rule.origin });
    }

    for (pred, arity) in &guarded {
        rules.push(Rule::new(
            Head::Std(generic_atom(names::guard(pred), *arity)),
            vec![
                Literal::pos(generic_atom(names::renamed_update(Polarity::Insert, pred), *arity)),
                Literal::pos(generic_atom(names::renamed_update(Polarity::Delete, pred), *arity)),
            ],
        ));
    }

    for u in up.delta.iter() {
        rules.push(Rule::fact(
            u.atom.with_predicate(names::delta_fact(u.polarity, &u.atom.predicate)),
        ));
    }

    for ((polarity, pred), arity) in &bridges {
        let bridge = generic_atom(names::bridge(*polarity, pred), *arity);
        for source in [names::renamed_update(*polarity, pred), names::delta_fact(*polarity, pred)] {
            rules.push(Rule::new(
                Head::Std(bridge.clone()),
                vec![Literal::pos(generic_atom(source, *arity))],
            ));
        }
    }

    StandardProgram::from_rules(rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Atom, DeltaSet, Program, Term, UpdateAtom};
    use crate::names::PredicateRole;

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    /// A confirmed manager is inserted unless already present.
    fn confirm_program() -> UpdateProgram {
        let mgr = Atom::new("mgr", vec![v("X"), v("D")]);
        let confirm = |x: &str| Atom::new("confirm", vec![v(x), v("D")]);
        let program = Program::new(vec![
            Rule::new(
                Head::Upd(UpdateAtom::insert(mgr.clone())),
                vec![Literal::upd(true, UpdateAtom::insert(confirm("X")))],
            ),
            Rule::new(
                Head::Upd(UpdateAtom::delete(mgr.clone())),
                vec![
                    Literal::pos(mgr.clone()),
                    Literal::upd(false, UpdateAtom::insert(mgr)),
                    Literal::upd(true, UpdateAtom::insert(confirm("Y"))),
                ],
            ),
        ])
        .unwrap();
        let delta = DeltaSet::from_updates([UpdateAtom::insert(Atom::ground("confirm", &["x", "d"]))]).unwrap();
        UpdateProgram::new(delta, program).unwrap()
    }

    #[test]
    fn guarded_rules_and_bridges() {
        let st = rewrite_st(&confirm_program());
        let text = alloc::format!("{st}");
        let expected = "\
@ck_mgr(X1,X2) :- @plus_mgr(X1,X2), @minus_mgr(X1,X2).
@ins_confirm(x,d).
@insb_confirm(X1,X2) :- @ins_confirm(X1,X2).
@insb_confirm(X1,X2) :- @plus_confirm(X1,X2).
@insb_mgr(X1,X2) :- @ins_mgr(X1,X2).
@insb_mgr(X1,X2) :- @plus_mgr(X1,X2).
@minus_mgr(X,D) :- mgr(X,D), not @insb_mgr(X,D), @insb_confirm(Y,D), not @ck_mgr(X,D).
@plus_mgr(X,D) :- @insb_confirm(X,D), not @ck_mgr(X,D).
";
        assert_eq!(text, expected);
        assert_eq!(st.role("@insb_mgr"), Some(PredicateRole::Bridge(Polarity::Insert)));
        assert_eq!(st.role("mgr"), Some(PredicateRole::User));
    }

    #[test]
    fn every_active_image_has_one_guard() {
        let up = confirm_program();
        let st = rewrite_st(&up);
        for r in st.rules() {
            let head = &r.head.atom().predicate;
            let guards = r
                .body
                .iter()
                .filter(|l| matches!(l, Literal::Std { positive: false, atom } if atom.predicate.starts_with("@ck_")))
                .count();
            if names::as_renamed_update(head).is_some() {
                assert_eq!(guards, 1, "{r}");
            } else {
                assert_eq!(guards, 0, "{r}");
            }
        }
    }

    #[test]
    fn empty_delta_without_update_bodies_adds_only_guards() {
        let a = Atom::new("a", vec![]);
        let program = Program::new(vec![Rule::new(Head::Upd(UpdateAtom::insert(a)), vec![Literal::neg(Atom::new("b", vec![]))])]).unwrap();
        let st = rewrite_st(&UpdateProgram::new(DeltaSet::new(), program).unwrap());
        let text = alloc::format!("{st}");
        assert_eq!(text, "@ck_a :- @plus_a, @minus_a.\n@plus_a :- not b, not @ck_a.\n");
    }
}
