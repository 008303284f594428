use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclohopf")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cyclohopf-cli-{}-{name}", std::process::id()))
}

#[test]
fn verify_rmatrix_passes() {
    let out = run(&["verify", "--suite", "rmatrix", "--n", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["field"]["conductor"], 6);
}

#[test]
fn shimizu_dim_n2() {
    let out = run(&["adjoint", "--n", "2", "--d", "2", "--xi", "0", "--conditions", "ad1,ad3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["dim"], 4);
}

#[test]
fn relative_dim_n1() {
    let out = run(&["adjoint", "--n", "1", "--d", "1", "--xi", "0", "--conditions", "ad1,ad2,ad3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["dim"], 1);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["adjoint", "--n", "4", "--d", "3"]).status.code(), Some(2));
    assert_eq!(run(&["adjoint", "--n", "2", "--conditions", "ad9"]).status.code(), Some(2));
    assert_eq!(run(&["adjoint", "--n", "2", "--conditions", "ad1", "--reduced"]).status.code(), Some(2));
    assert_eq!(run(&["braided-adjoint", "--n", "2", "--modules", "nope"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "--suite", "hopf", "--n", "2", "--seed", "5"]);
    let b = run(&["verify", "--suite", "hopf", "--n", "2", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert!(v["report"][0].get("timing_ms").is_none());
    let t = json_of(&run(&["verify", "--suite", "field", "--n", "3", "--timing"]));
    assert!(t["report"][0].get("timing_ms").is_some());
}

#[test]
fn out_file_and_report_roundtrip() {
    let path = scratch("braided.json");
    let out = run(&["braided-adjoint", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rep = run(&["report", "--json", path.to_str().unwrap()]);
    assert_eq!(rep.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&rep.stdout).contains("0 fail"));
    std::fs::remove_file(path).ok();
}

#[test]
fn report_with_failure_exits_1() {
    let path = scratch("failing.json");
    let doc = r#"{"report":[{"claim_id":"a/b","status":"fail","witness":{"indices":[0]}},{"claim_id":"c","status":"pass"}]}"#;
    std::fs::write(&path, doc).unwrap();
    let out = run(&["report", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL a/b"));
    std::fs::remove_file(path).ok();
}
