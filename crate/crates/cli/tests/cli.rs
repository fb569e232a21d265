//! End-to-end runs of the `dlforge` binary.

use std::path::Path;
use std::process::{Command, Output};

fn dlforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dlforge")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn passing_suite_exits_zero() {
    let o = dlforge(&["run", "--suite", "appendix"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("overall: PASS"));
}

#[test]
fn injected_fault_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "fault.cfg", "fault = relation-term:2\n");
    let o = dlforge(&["run", "--suite", "all", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  big-relation/relation-sum"));
}

#[test]
fn usage_and_config_errors_exit_two() {
    assert_eq!(dlforge(&["run", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(dlforge(&["run"]).status.code(), Some(2));
    assert_eq!(dlforge(&["run", "--suite", "all", "--format", "xml"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.cfg", "max_degree = lots\n");
    let o = dlforge(&["run", "--suite", "priddy", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("max_degree"));
}

#[test]
fn json_report_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "t.cfg", "timing = off\n");
    let out = dir.path().join("report.json");
    let o = dlforge(&[
        "run",
        "--suite",
        "big-relation",
        "--config",
        &cfg,
        "--format",
        "json",
        "--report",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let got = std::fs::read_to_string(&out).unwrap();
    assert_eq!(got, include_str!("golden/big-relation.json"));
}

#[test]
fn text_report_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "t.cfg", "timing = off\n");
    let o = dlforge(&["run", "--suite", "en-level", "--config", &cfg]);
    assert_eq!(stdout(&o), include_str!("golden/en-level.txt"));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "t.cfg", "timing = off\n");
    let run = |name: &str| {
        let out = dir.path().join(name);
        dlforge(&[
            "run",
            "--suite",
            "all",
            "--parallel",
            "--config",
            &cfg,
            "--format",
            "json",
            "--report",
            out.to_str().unwrap(),
        ]);
        std::fs::read(out).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn normalize_and_en_level() {
    let dir = tempfile::tempdir().unwrap();
    let ctx = write(dir.path(), "x.ctx", "gen x deg 2\n");
    let o = dlforge(&["normalize", "--context", &ctx, "--expr", "Q20 Q8 x"]);
    assert_eq!(stdout(&o).trim(), "Q18 Q10 x + Q17 Q11 x");
    let o = dlforge(&["normalize", "--context", &ctx, "--expr", "Q2 x"]);
    assert_eq!(stdout(&o).trim(), "x^2");
    let o = dlforge(&["en-level", "--context", &ctx, "--expr", "Q20 Q8 x"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with('E'));
    let o = dlforge(&["normalize", "--context", &ctx, "--expr", "Q5 x", "--window", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = dlforge(&["normalize", "--context", &ctx, "--expr", "Q5 x", "--window", "5", "--strict"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dlforge(&["normalize", "--context", &ctx, "--expr", "Q3 z"]);
    assert_eq!(o.status.code(), Some(2));
}
