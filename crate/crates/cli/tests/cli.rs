use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BOOLEAN: &str =
    r#"{"elements":["0","1"],"zero":0,"one":1,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]]}"#;
const XOR: &str =
    r#"{"elements":["0","1"],"zero":0,"one":1,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semicomp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_reports_orderability() {
    let dir = tempfile::tempdir().unwrap();
    let b = write(dir.path(), "boolean.json", BOOLEAN);
    let x = write(dir.path(), "xor.json", XOR);

    let o = run(&["check", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("orderable: yes"));

    let o = run(&["check", x.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("orderable: no"));
    assert!(out.contains("zero-sum-free: no (1 + 1 = 0)"));
}

#[test]
fn check_json_output() {
    let dir = tempfile::tempdir().unwrap();
    let b = write(dir.path(), "boolean.json", BOOLEAN);
    let o = run(&["--format", "json", "check", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["orderable"], true);
    assert_eq!(v["zero_sum_free"], true);
    assert_eq!(v["natural_quasiorder"], serde_json::json!(["11", "01"]));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"elements":["#);
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));

    let lopsided = write(
        dir.path(),
        "lopsided.json",
        r#"{"elements":["0","1"],"zero":0,"one":1,"add":[[0,1]],"mul":[[0,0],[0,1]]}"#,
    );
    assert_eq!(
        run(&["check", lopsided.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["gallery", "no-such-thing"]).status.code(), Some(2));
}

#[test]
fn complete_refuses_non_orderable() {
    let dir = tempfile::tempdir().unwrap();
    let x = write(dir.path(), "xor.json", XOR);
    let o = run(&["complete", x.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not orderable"));
}

#[test]
fn complete_language_semiring() {
    let o = run(&["--battery", "100,50,50", "complete", "lang:1:2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("{ε}: {ε}, {ε}"));
}

#[test]
fn complete_nat_is_nat_infinity() {
    let o = run(&["--battery", "100,50,50", "complete", "nat"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("nat-infinity"));
    assert!(out.contains("Σ{1 ↦ aleph0} = ∞"));
}

#[test]
fn congruence_json() {
    let o = run(&[
        "--format",
        "json",
        "congruence",
        "boolean",
        "1*[1]",
        "2*[1]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sim"], true);
    assert_eq!(v["witness"], serde_json::Value::Null);

    let o = run(&[
        "--format",
        "json",
        "congruence",
        "boolean",
        "1*[0]",
        "1*[1]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sim"], false);
    assert_eq!(v["lesssim_forward"], true);
    assert_eq!(v["lesssim_backward"], false);
}

#[test]
fn selftest_is_deterministic() {
    let spawn = || {
        Command::new(env!("CARGO_BIN_EXE_semicomp"))
            .args(["--seed", "3", "--format", "json", "selftest"])
            .stdout(std::process::Stdio::piped())
            .spawn()
            .unwrap()
    };
    let (a, b) = (spawn(), spawn());
    let (a, b) = (a.wait_with_output().unwrap(), b.wait_with_output().unwrap());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 3);
}
