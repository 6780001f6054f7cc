use std::path::Path;
use std::process::{Command, Output};

use liegrad_core::catalog::FIXTURE_NAMES;

fn liegrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liegrad")).args(args).output().unwrap()
}

fn emit(dir: &Path, name: &str) -> String {
    let out = liegrad(&["catalog", "emit", name]);
    assert!(out.status.success());
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn catalog_lists_every_fixture() {
    let text = stdout(&liegrad(&["catalog", "list"]));
    for name in FIXTURE_NAMES {
        assert!(text.contains(name), "{name} missing");
    }
    let json: serde_json::Value = serde_json::from_slice(&liegrad(&["--json", "catalog", "list"]).stdout).unwrap();
    assert_eq!(json.as_array().unwrap().len(), FIXTURE_NAMES.len());
}

#[test]
fn support_of_the_dihedral_fixture_is_not_commutative() {
    let dir = tempfile::tempdir().unwrap();
    let job = emit(dir.path(), "dihedral_sl2");
    let v: serde_json::Value = serde_json::from_slice(&liegrad(&["--json", "support", &job]).stdout).unwrap();
    assert_eq!(v["commutative"], false);
    assert_eq!(v["subgroup"].as_array().unwrap().len(), 6);
    let gs = stdout(&liegrad(&["graded-simple", &job]));
    assert!(gs.starts_with("graded simple: no"));
}

#[test]
fn analyses_agree_on_the_swap_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let job = emit(dir.path(), "swap_sl2_sl2");
    let rad: serde_json::Value = serde_json::from_slice(&liegrad(&["--json", "radical", &job]).stdout).unwrap();
    assert_eq!(rad["dim"], 0);
    let levi: serde_json::Value = serde_json::from_slice(&liegrad(&["--json", "levi", &job]).stdout).unwrap();
    assert_eq!(levi["dim"], 6);
    let dec: serde_json::Value = serde_json::from_slice(&liegrad(&["--json", "decompose", &job]).stdout).unwrap();
    let blocks = dec["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 1);
    assert_eq!(blocks[0]["summands"], 2);
    assert_eq!(blocks[0]["isomorphism"]["kind"], "strong");
    assert!(stdout(&liegrad(&["graded-simple", &job])).starts_with("graded simple: yes"));
}

#[test]
fn lemma_check_reports_fiber_ideal_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let job = emit(dir.path(), "dihedral_sl2");
    let v: serde_json::Value =
        serde_json::from_slice(&liegrad(&["--json", "lemma-check", "--max-chain", "4", &job]).stdout).unwrap();
    assert_eq!(v["chains"]["max_length"], 4);
    assert!(!v["fiber_ideals"].as_array().unwrap().is_empty());
    assert!(v["fiber_ideals"].as_array().unwrap().iter().all(|p| p["commute"] == true));
}

#[test]
fn out_writes_the_document_and_scrambled_emits_validate() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("doc.json");
    let scrambled = liegrad(&["catalog", "emit", "sl3_natural_z3", "--seed", "4"]);
    let job = dir.path().join("s.json");
    std::fs::write(&job, &scrambled.stdout).unwrap();
    let out = liegrad(&["validate", "--out", target.to_str().unwrap(), job.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["dim"], 11);
}

#[test]
fn usage_errors_and_unreadable_inputs_exit_with_parse_status() {
    assert_eq!(liegrad(&["--help"]).status.code(), Some(0));
    assert_eq!(liegrad(&["frobnicate"]).status.code(), Some(1));
    let missing = liegrad(&["radical", "/nonexistent/job.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(missing.stdout.is_empty());
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error: parse error"));
    assert_eq!(liegrad(&["catalog", "emit", "no_such_fixture"]).status.code(), Some(2));
}

#[test]
fn infinite_groups_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let job = emit(dir.path(), "sl2_z2");
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&job).unwrap()).unwrap();
    v["grading"]["group"] = "Z".into();
    std::fs::write(&job, v.to_string()).unwrap();
    let out = liegrad(&["validate", &job]);
    assert_eq!(out.status.code(), Some(2));
}
