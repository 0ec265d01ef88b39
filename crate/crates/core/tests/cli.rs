//! End-to-end tests of the `renner` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn renner(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_renner"));
    cmd.args(args).env_remove("RENNER_CACHE_DIR").env_remove("RENNER_MAX_WORK");
    match cache {
        Some(dir) => cmd.env("RENNER_CACHE_DIR", dir),
        None => cmd.env("XDG_CACHE_HOME", std::env::temp_dir().join("renner-cli-unused")),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn table_csv_for_the_rook_hecke_a_matrix() {
    let o = renner(&["table", "--monoid", "rook", "--n", "2", "--kind", "Aq", "--format", "csv", "--no-cache"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "class,(1^2),(2),(1),(0)\n(1^2),1,0,2,1\n(2),0,1,q-1,q\n(1),0,0,1,1\n(0),0,0,0,1\n");
}

#[test]
fn table_json_carries_metadata() {
    let o = renner(&["table", "--monoid", "symplectic", "--n", "2", "--kind", "mq", "--format", "json", "--no-cache"], None);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["metadata"]["monoidKind"], "symplectic");
    assert_eq!(v["metadata"]["tableKind"], "Mq");
    assert_eq!(v["metadata"]["orderVersion"], 1);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    let col = v["cols"].as_array().unwrap().iter().position(|c| c == "(2)").unwrap();
    let row = v["rows"].as_array().unwrap().iter().position(|r| r == "(0,1^2)").unwrap();
    assert_eq!(v["entries"][row][col], "q^4-q^2");
}

#[test]
fn latex_and_pretty_formats_render() {
    let o = renner(&["table", "--monoid", "rook", "--n", "1", "--kind", "M", "--format", "latex", "--no-cache"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\\kbordermatrix"));
    let o = renner(&["table", "--monoid", "rook", "--n", "1", "--kind", "M", "--no-cache"], None);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() >= 3);
}

#[test]
fn cache_hits_are_byte_identical_and_no_cache_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["table", "--monoid", "symplectic", "--n", "2", "--kind", "Yq", "--format", "json"];
    let first = renner(&args, Some(dir.path()));
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = renner(&args, Some(dir.path()));
    assert_eq!(first.stdout, second.stdout);

    let empty = tempfile::tempdir().unwrap();
    let mut no_cache = args.to_vec();
    no_cache.push("--no-cache");
    let third = renner(&no_cache, Some(empty.path()));
    assert_eq!(third.stdout, first.stdout);
    assert_eq!(std::fs::read_dir(empty.path()).unwrap().count(), 0);
}

#[test]
fn corrupt_cache_entries_are_replaced_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["table", "--monoid", "rook", "--n", "2", "--kind", "M", "--format", "json"];
    let good = renner(&args, Some(dir.path()));
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    std::fs::write(&entry, "{ not json").unwrap();
    let again = renner(&args, Some(dir.path()));
    assert!(again.status.success());
    assert_eq!(again.stdout, good.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("warning"));
}

#[test]
fn reduce_prints_coefficients() {
    let o = renner(&["reduce", "--monoid", "symplectic", "--n", "2", "0,3,0,0"], None);
    assert!(o.status.success());
    assert_eq!(json(&o), serde_json::json!({ "(0)": "q^3" }));
    let o = renner(&["reduce", "--monoid", "rook", "--n", "2", "2,1"], None);
    assert_eq!(json(&o), serde_json::json!({ "(2)": "1" }));
}

#[test]
fn reduce_check_reports_every_character() {
    let o = renner(&["reduce", "--monoid", "symplectic", "--n", "2", "--check", "0,3,0,0"], None);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["check"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_reports_both_kinds() {
    let o = renner(&["verify", "--n", "2", "--suite", "hecke"], None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_exit_with_status_two() {
    let cases: &[&[&str]] = &[
        &["reduce", "--monoid", "symplectic", "--n", "2", "0,3,3,0"],
        &["reduce", "--monoid", "symplectic", "--n", "2", "1,0,0,4"],
        &["reduce", "--monoid", "symplectic", "--n", "2", "1,2"],
        &["reduce", "--monoid", "rook", "--n", "5", "1,2,3,4,5"],
        &["table", "--monoid", "symplectic", "--n", "9", "--kind", "M", "--no-cache"],
        &["table", "--monoid", "rook", "--n", "2", "--kind", "Q"],
        &["verify", "--n", "0"],
    ];
    for args in cases {
        let o = renner(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn work_bound_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_renner"))
        .args(["table", "--monoid", "rook", "--n", "2", "--kind", "M", "--no-cache"])
        .env("RENNER_MAX_WORK", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("work bound"));
}
