use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str, file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).join(file)
}

fn actlog(args: &[&str], name: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_actlog"))
        .args(args)
        .arg("-p")
        .arg(fixture(name, "program.adl"))
        .arg("-d")
        .arg(fixture(name, "db.adb"))
        .arg("-u")
        .arg(fixture(name, "delta.adu"))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn applied_update_exits_zero_and_prints_the_database() {
    let o = actlog(&["apply", "--semantics", "uts"], "unique_total");
    assert_eq!(o.status.code(), Some(0));
    let body: String = stdout(&o).lines().filter(|l| !l.starts_with('%')).map(|l| format!("{l}\n")).collect();
    assert_eq!(body, "emp(a).\nnew(a).\nworker(a).\n");
    assert!(actlog::format::parse_database(&stdout(&o)).is_ok());
}

#[test]
fn rejected_update_exits_two() {
    let o = actlog(&["apply", "--semantics", "twfs"], "worker_choice_derived");
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("% status: rejected-unchanged"));
}

#[test]
fn unknown_facts_violate_total_only_semantics() {
    let dir = std::env::temp_dir().join(format!("actlog-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let db = dir.join("db.adb");
    std::fs::write(&db, "emp(b)?\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_actlog"))
        .args(["apply", "--semantics", "ts", "-p"])
        .arg(fixture("unique_total", "program.adl"))
        .arg("-d")
        .arg(&db)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn parse_errors_exit_one_with_a_location() {
    let dir = std::env::temp_dir().join(format!("actlog-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("bad.adl");
    std::fs::write(&p, "a :- b\nc.").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_actlog")).args(["wf", "-p"]).arg(&p).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.adl:2:1"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn seeded_choice_is_recorded_and_replayable() {
    let first = actlog(&["apply", "--semantics", "ms", "--choose", "random", "--seed", "3", "--json"], "emp_or_mgr");
    let second = actlog(&["apply", "--semantics", "ms", "--choose", "random", "--seed", "3", "--json"], "emp_or_mgr");
    assert_eq!(first.stdout, second.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["seed"], 3);
    assert_eq!(doc["policy"], "seeded");
    assert!(doc["output"]["true"].as_array().unwrap().iter().any(|v| v == "worker(a)"));
}

#[test]
fn models_lists_flags() {
    let o = actlog(&["models"], "four_models");
    let text = stdout(&o);
    assert_eq!(text.matches("% model").count(), 4);
    assert!(text.contains("well-founded"));
    assert!(text.contains("max-deterministic"));
    let o = actlog(&["models", "--json"], "four_models");
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc.as_array().unwrap().len(), 4);
}

#[test]
fn compare_reports_every_semantics() {
    let o = actlog(&["compare", "--json"], "worker_choice");
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 9);
    assert_eq!(doc["leq"].as_array().unwrap().len(), 9);
}

#[test]
fn ground_and_wf_are_stable() {
    for cmd in [&["ground"][..], &["ground", "--relevant"], &["wf"], &["rewrite", "--mode", "bm"]] {
        let a = actlog(cmd, "manager_livelock");
        let b = actlog(cmd, "manager_livelock");
        assert_eq!(a.status.code(), Some(0), "{cmd:?}");
        assert_eq!(a.stdout, b.stdout, "{cmd:?}");
    }
}
