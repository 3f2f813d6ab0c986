use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2tilt")).args(args).env_remove("SL2TILT_CUTOFF").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn eps1_evaluates_to_the_loop() {
    let v = json(&["diagram-eval", data("eps1.sd").to_str().unwrap()]);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["matrix"]["entries"][0][0][0][0], "eps1");
    assert_eq!(v["matrix"]["source"], serde_json::json!([[1, 0]]));
}

#[test]
fn needle_equals_zero() {
    let v = json(&["diagram-equal", data("needle.sd").to_str().unwrap(), data("zero_g.sd").to_str().unwrap()]);
    assert_eq!(v["equal"], true);
    let v = json(&["diagram-equal", data("eps1.sd").to_str().unwrap(), data("zero_g.sd").to_str().unwrap()]);
    assert_eq!(v["equal"], false);
}

#[test]
fn arity_errors_name_the_slice() {
    let out = run(&["diagram-eval", data("bad_arity.sd").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("arity error in slice 0"), "{err}");
}

#[test]
fn diagram_files_need_the_extension() {
    let out = run(&["diagram-eval", "Cargo.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn l_must_exceed_two() {
    assert!(!run(&["qint", "--a", "3", "--l", "2"]).status.success());
    assert!(run(&["qint", "--a", "3", "--l", "3"]).status.success());
}

#[test]
fn unknown_flags_are_rejected() {
    assert!(!run(&["orbit", "--x", "0", "--bogus"]).status.success());
}

#[test]
fn cutoff_default_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_sl2tilt"))
        .args(["endo-hom"])
        .env("SL2TILT_CUTOFF", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["m"], 3);
    assert_eq!(v["poincare"], serde_json::json!([[0, 1, 1], [2, 3, 1]]));
}

#[test]
fn orbit_and_theta() {
    let v = json(&["orbit", "--x", "1", "--cutoff", "12", "--l", "3"]);
    assert_eq!(v["block"], serde_json::json!([1, 3, 7, 9]));
    let v = json(&["theta", "--word", "s", "--start", "0"]);
    assert_eq!(v["object"], serde_json::json!([]));
    let v = json(&["theta", "--word", "t", "--object", "[[1,0,1]]"]);
    assert_eq!(v["object"], serde_json::json!([[1, -1, 1], [1, 1, 1]]));
}

#[test]
fn pretty_format() {
    let out = run(&["--format", "pretty", "hom", "--x", "1", "--y", "2", "--m", "4"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "v");
}

#[test]
fn verify_exit_code_reflects_the_report() {
    let out = run(&["verify", "--m", "6", "--depth", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(!run(&["verify", "--m", "5"]).status.success());
}
