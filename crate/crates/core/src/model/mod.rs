//! The language and database data model: terms, atoms, update atoms, rules,
//! programs, three-valued databases, update sets and interpretations.

mod database;
mod interpretation;
mod program;
mod rename;
mod syntax;

pub use database::{info_leq, Database, DatabaseError, DeltaSet, FactStatus};
pub use interpretation::{eval_literal, is_model, rule_satisfied, Interpretation, ModelError, TruthValue};
pub use program::{Program, UpdateProgram, ValidationError, Violation};
pub(crate) use program::{canonical_order, collect_rule_constants};
pub use rename::{ConstantMap, Rename};
pub use syntax::{
    is_bare_constant, is_ident_char, Atom, Builtin, Head, Literal, Polarity, Rule, Span, Term,
    UpdateAtom,
};

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn prop(name: &str) -> Atom {
        Atom::new(name, Vec::new())
    }

    fn interp(values: &[(&str, TruthValue)]) -> Interpretation {
        Interpretation::from_values(values.iter().map(|(n, v)| (prop(n), *v)))
    }

    fn rule(head: &str, body: Vec<Literal>) -> Rule {
        Rule::new(Head::Std(prop(head)), body)
    }

    use TruthValue::{False as F, True as T, Undefined as U};

    #[test]
    fn eval_literal_examples() {
        let i = interp(&[("a", T), ("b", U)]);
        assert_eq!(eval_literal(&Literal::pos(prop("a")), &i).unwrap(), T);
        assert_eq!(eval_literal(&Literal::neg(prop("b")), &i).unwrap(), U);
        let x = Term::constant("x");
        assert_eq!(eval_literal(&Literal::builtin(Builtin::Neq, x.clone(), x), &i).unwrap(), F);
        assert!(matches!(
            eval_literal(&Literal::pos(prop("zz")), &i),
            Err(ModelError::OutsideUniverse { .. })
        ));
    }

    #[test]
    fn rule_satisfied_examples() {
        let ab = rule("a", vec![Literal::pos(prop("b"))]);
        assert!(rule_satisfied(&ab, &interp(&[("a", T), ("b", U)])).unwrap());
        assert!(!rule_satisfied(&ab, &interp(&[("a", F), ("b", T)])).unwrap());
        let cab = rule("c", vec![Literal::pos(prop("a")), Literal::pos(prop("b"))]);
        // min(True, Undefined) = Undefined <= Undefined
        assert!(rule_satisfied(&cab, &interp(&[("c", U), ("a", T), ("b", U)])).unwrap());
    }

    fn four_models() -> Vec<Rule> {
        vec![
            rule("a", vec![Literal::neg(prop("b"))]),
            rule("b", vec![Literal::neg(prop("a"))]),
            rule("c", vec![Literal::pos(prop("a"))]),
            rule("c", vec![Literal::pos(prop("b"))]),
            rule("c", vec![Literal::neg(prop("d"))]),
            rule("d", vec![Literal::neg(prop("c"))]),
        ]
    }

    #[test]
    fn is_model_examples() {
        let m2 = interp(&[("a", U), ("b", U), ("c", T), ("d", F)]);
        assert!(is_model(&four_models(), &m2).unwrap());
        let all_false = interp(&[("a", F), ("b", F), ("c", F), ("d", F)]);
        // c :- not d is violated
        assert!(!is_model(&four_models(), &all_false).unwrap());
        assert!(is_model(&[], &all_false).unwrap());
    }

    #[test]
    fn literal_set_views() {
        let wf = interp(&[("a", U), ("c", U)]);
        let m = interp(&[("a", T), ("c", F)]);
        let n = interp(&[("a", F), ("c", F)]);
        assert!(wf.literal_subset(&m));
        assert!(!m.literal_subset(&wf));
        assert!(!m.consistent_with(&n));
        assert!(m.union(&n).is_none());
        assert_eq!(m.intersection(&n), interp(&[("a", U), ("c", F)]));
    }

    #[test]
    fn negation_involution() {
        for v in [F, U, T] {
            assert_eq!(!!v, v);
        }
        assert!(F < U && U < T);
    }

    #[test]
    fn validation_rejects() {
        let x = || Term::var("X");
        let unsafe_rule = Rule::new(
            Head::Std(Atom::new("p", vec![x()])),
            vec![Literal::neg(Atom::new("q", vec![x()]))],
        );
        let err = Program::new(vec![unsafe_rule]).unwrap_err();
        assert!(matches!(err.violation, Violation::Unsafe { .. }));

        let reserved = Rule::fact(prop("@x"));
        assert!(matches!(
            Program::new(vec![reserved]).unwrap_err().violation,
            Violation::ReservedPredicate { .. }
        ));

        let on_idb = vec![
            Rule::fact(prop("d")),
            Rule::new(Head::Upd(UpdateAtom::insert(prop("d"))), vec![]),
        ];
        assert!(matches!(
            Program::new(on_idb).unwrap_err().violation,
            Violation::UpdateOnDerived { .. }
        ));

        let arity = vec![Rule::fact(Atom::ground("p", &["a"])), Rule::fact(Atom::ground("p", &["a", "b"]))];
        assert!(matches!(
            Program::new(arity).unwrap_err().violation,
            Violation::ArityMismatch { .. }
        ));

        // a ground head with a variable-free body is safe
        let ground_neg = Rule::new(Head::Std(prop("q")), vec![Literal::neg(prop("d"))]);
        assert!(Program::new(vec![ground_neg]).is_ok());
    }

    #[test]
    fn program_equality_is_set_equality() {
        let a = Rule::fact(prop("a"));
        let b = Rule::fact(prop("b"));
        let p1 = Program::new(vec![a.clone(), b.clone()]).unwrap();
        let p2 = Program::new(vec![b, a.clone(), a]).unwrap();
        assert_eq!(p1, p2);
    }
}
