use actlog::expect;

#[test]
fn fixture_expectations_hold() {
    let failures: Vec<String> = expect::CHECKS
        .iter()
        .filter_map(|(name, check)| check().err().map(|e| format!("{name}: {e}")))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_fixture_runs_under_every_semantics() {
    for f in actlog::fixtures::ALL {
        let up = f.update_program().unwrap();
        let d = f.database().unwrap();
        let c = actlog_core::compare(&up, &d, &actlog_core::RunConfig::new(actlog_core::SemanticsId::Ws));
        for row in c.rows {
            assert!(row.result.is_ok(), "{} under {}: {:?}", f.name, row.semantics, row.result);
        }
    }
}
