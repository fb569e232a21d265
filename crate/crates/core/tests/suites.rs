//! Suite registry behavior: determinism, fault injection and report rendering.

use dlforge::error::SuiteError;
use dlforge::verify::suites::SUITE_NAMES;
use dlforge::verify::{run_suite, Fault, Format, Status, VerifyConfig};

fn untimed() -> VerifyConfig {
    VerifyConfig { timing: false, ..VerifyConfig::default() }
}

#[test]
fn every_suite_passes_and_names_anchors() {
    for name in SUITE_NAMES {
        let r = run_suite(name, &untimed()).unwrap();
        assert!(r.passed(), "{name}: {}", r.to_text());
        assert!(!r.checks.is_empty());
        assert!(r.checks.iter().all(|c| !c.anchor.is_empty()), "{name}");
    }
}

#[test]
fn big_relation_has_eight_checks() {
    let r = run_suite("big-relation", &untimed()).unwrap();
    assert_eq!(r.checks.len(), 8);
}

#[test]
fn reports_are_deterministic() {
    let a = run_suite("all", &untimed()).unwrap().to_json();
    let b = run_suite("all", &untimed()).unwrap().to_json();
    assert_eq!(a, b);
    let parallel = VerifyConfig { parallel: true, ..untimed() };
    let c = run_suite("all", &parallel).unwrap();
    let serial = run_suite("all", &untimed()).unwrap();
    let ids = |r: &dlforge::verify::VerificationReport| r.checks.iter().map(|c| c.id.clone()).collect::<Vec<_>>();
    assert_eq!(ids(&c), ids(&serial));
}

#[test]
fn injected_fault_fails_with_a_witness() {
    for term in [0, 4, 11] {
        let cfg = VerifyConfig { fault: Some(Fault::RelationTerm(term)), ..untimed() };
        let r = run_suite("all", &cfg).unwrap();
        assert_eq!(r.overall, Status::Fail);
        let check = r.check("big-relation/relation-sum").unwrap();
        assert_eq!(check.status, Status::Fail);
        assert_ne!(check.witness, "0");
    }
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(matches!(run_suite("nope", &untimed()), Err(SuiteError::UnknownSuite(_))));
}

#[test]
fn xi5_chain_flags_imported_steps() {
    let r = run_suite("xi5-chain", &untimed()).unwrap();
    let imported: Vec<&str> = r.checks.iter().filter(|c| c.imported).map(|c| c.id.as_str()).collect();
    assert_eq!(imported, ["5-bracket-detects", "juggling-gluing"]);
    assert!(r.checks.iter().filter(|c| !c.imported).count() >= 10);
    assert_eq!(r.check("3-q16-xi4").unwrap().witness, "xi5");
}

#[test]
fn emitted_reports_round_trip() {
    let dir = std::env::temp_dir().join(format!("dlforge-suites-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let r = run_suite("appendix", &untimed()).unwrap();
    let json = dir.join("appendix.json");
    r.emit(&json, Format::Json).unwrap();
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(value["overall"], "pass");
    assert_eq!(value["suite"], "appendix");
    let text = dir.join("appendix.txt");
    r.emit(&text, Format::Text).unwrap();
    assert!(std::fs::read_to_string(&text).unwrap().contains("375 v3 a^3"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn small_degree_bound_reports_errors_not_panics() {
    let cfg = VerifyConfig { max_degree: 20, ..untimed() };
    let r = run_suite("steinberger", &cfg).unwrap();
    assert!(!r.passed());
    assert!(r.checks.iter().any(|c| c.status == Status::Error));
}
