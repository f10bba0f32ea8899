use alloc::vec;
use alloc::vec::Vec;

use super::{renamed, standardize_rule, StandardProgram};
use crate::model::{Head, Literal, Rule, UpdateProgram};

/// Complementary-literal rewriting: `+A :- Body` becomes `+A :- Body, not -A`
/// (symmetrically for `-A`), and each input update `+A` becomes the rule
/// `+A :- not -A.` Body update atoms are only renamed, never bridged.
pub fn rewrite_bm(up: &UpdateProgram) -> StandardProgram {
    let mut rules: Vec<Rule> = Vec::new();
    for rule in up.program.rules() {
        let mut out = standardize_rule(rule);
        if let Head::Upd(u) = &rule.head {
            out.body.push(Literal::neg(renamed(u.polarity.opposite(), &u.atom)));
        }
        rules.push(out);
    }
    for u in up.delta.iter() {
        rules.push(Rule::new(
            Head::Std(renamed(u.polarity, &u.atom)),
            vec![Literal::neg(renamed(u.polarity.opposite(), &u.atom))],
        ));
    }
    StandardProgram::from_rules(rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Atom, DeltaSet, Program, Term, UpdateAtom};

    #[test]
    fn confirm_rules() {
        let v = |n: &str| Term::var(n);
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
        let bm = rewrite_bm(&UpdateProgram::new(delta, program).unwrap());
        let expected = "\
@minus_mgr(X,D) :- mgr(X,D), not @plus_mgr(X,D), @plus_confirm(Y,D), not @plus_mgr(X,D).
@plus_confirm(x,d) :- not @minus_confirm(x,d).
@plus_mgr(X,D) :- @plus_confirm(X,D), not @minus_mgr(X,D).
";
        assert_eq!(alloc::format!("{bm}"), expected);
    }

    #[test]
    fn deductive_only_program_is_unchanged() {
        let a = Atom::new("a", vec![]);
        let b = Atom::new("b", vec![]);
        let program = Program::new(vec![Rule::new(Head::Std(a), vec![Literal::neg(b)])]).unwrap();
        let bm = rewrite_bm(&UpdateProgram::new(DeltaSet::new(), program.clone()).unwrap());
        assert_eq!(bm.rules(), program.rules());
    }
}
