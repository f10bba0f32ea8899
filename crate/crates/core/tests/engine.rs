use actlog_core::{
    compare, run, Atom, Database, DeltaSet, EngineError, FactStatus, Head, Literal, Program, Rule,
    RunConfig, RunStatus, SemanticsId, Term, UpdateAtom, UpdateProgram,
};

fn emp(c: &str) -> Atom {
    Atom::ground("emp", &[c])
}

/// `+emp(X) :- +new(X), not -emp(X).` with `+new(a)`.
fn hire() -> UpdateProgram {
    let x = || vec![Term::var("X")];
    let program = Program::new(vec![Rule::new(
        Head::Upd(UpdateAtom::insert(Atom::new("emp", x()))),
        vec![
            Literal::upd(true, UpdateAtom::insert(Atom::new("new", x()))),
            Literal::upd(false, UpdateAtom::delete(Atom::new("emp", x()))),
        ],
    )])
    .unwrap();
    let delta = DeltaSet::from_updates([UpdateAtom::insert(Atom::ground("new", &["a"]))]).unwrap();
    UpdateProgram::new(delta, program).unwrap()
}

#[test]
fn every_semantics_inserts_the_hire() {
    let c = compare(&hire(), &Database::new(), &RunConfig::new(SemanticsId::Ws));
    assert_eq!(c.rows.len(), 9);
    for row in &c.rows {
        let r = row.result.as_ref().unwrap();
        assert_eq!(r.status, RunStatus::Applied, "{}", row.semantics);
        assert!(r.output_db.is_true(&emp("a")), "{}", row.semantics);
    }
    assert!(c.leq.iter().flatten().all(|x| *x == Some(true)));
}

#[test]
fn empty_program_leaves_the_database() {
    let up = UpdateProgram::new(DeltaSet::new(), Program::new(vec![]).unwrap()).unwrap();
    let d = Database::from_facts([emp("b")], []).unwrap();
    for row in compare(&up, &d, &RunConfig::new(SemanticsId::Ws)).rows {
        assert_eq!(row.result.unwrap().output_db, d, "{}", row.semantics);
    }
}

#[test]
fn total_only_semantics_reject_unknown_input() {
    let mut d = Database::new();
    d.insert(emp("b"), FactStatus::Unknown).unwrap();
    for xs in SemanticsId::ALL {
        let r = run(&hire(), &d, &RunConfig::new(xs));
        if xs.requires_total_input() {
            assert_eq!(r.unwrap_err(), EngineError::NonTotalInput { semantics: xs });
        } else {
            assert!(r.unwrap().output_db.is_unknown(&emp("b")));
        }
    }
}
