use std::path::PathBuf;
use std::process::{Command, Output};

fn grkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("grkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn formula_value() {
    let o = grkit(&["formula", "--id", "bk-path", "--k", "3", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("exact 8"));
    let o = grkit(&["formula", "--id", "gr3-k13-kipas", "--n", "6"]);
    assert!(stdout(&o).starts_with("interval 14 15"), "{}", stdout(&o));
}

#[test]
fn generate_then_detect() {
    let f = scratch("t5.ecg");
    let o = grkit(&["generate", "--family", "t-path-witness", "--n", "5", "--verify", "-o", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let input = f.to_str().unwrap();
    let o = grkit(&["detect", "--input", input, "--pattern", "mono:path:5", "--any-color"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "absent");
    let o = grkit(&["detect", "--input", input, "--pattern", "path:4", "--color", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("present color 1"));
    let o = grkit(&["detect", "--input", input, "--longest-path", "--color", "1"]);
    assert!(stdout(&o).starts_with("longest 4 "), "{}", stdout(&o));
    let o = grkit(&["classify", "--input", input, "--context", "k13"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn compute_ramsey() {
    let o = grkit(&["compute", "--quantity", "ramsey", "--red", "path:3", "--blue", "path:3", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("exact 3"));
    assert!(out.contains("witness 2 vertices"));
}

#[test]
fn compute_json_and_budget() {
    let o = grkit(&["--json", "compute", "--quantity", "t", "--target", "path:4", "--max-n", "8"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"]["lo"], 5);
    assert_eq!(v["value"]["exact"], true);
    let o = grkit(&["compute", "--quantity", "t", "--target", "path:5", "--max-n", "9", "--node-budget", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn checks() {
    let o = grkit(&["check", "--lemma", "3.1i", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("holds"));
    let o = grkit(&["check", "--lemma", "3.2", "--n", "12", "--a", "3", "--samples", "2000", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not a proof"));
    let o = grkit(&[
        "grverify",
        "--k",
        "4",
        "--rainbow",
        "path:5",
        "--target",
        "path:6",
        "--N",
        "6",
        "--mode",
        "structure",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("counterexample"));
}

#[test]
fn selftest_filter() {
    let o = grkit(&["selftest", "--only", "lemma4.2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS lemma4.2"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 1);
}

#[test]
fn usage_errors() {
    assert_eq!(grkit(&["bogus"]).status.code(), Some(2));
    let o = grkit(&["detect", "--input", "/nonexistent.ecg", "--pattern", "path:3", "--any-color"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(grkit(&["formula", "--id", "bk-path", "--k", "4", "--n", "3"]).status.code(), Some(2));
}
