use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("binary runs")
}

fn json_reports(out: &Output) -> Vec<Value> {
    let v: Value = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    v.as_array().expect("array of reports").clone()
}

#[test]
fn ybe_passes() {
    let out = verify(&["ybe"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS ybe.desuperized"));
    assert!(text.contains("1 checks, 0 failed"));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = verify(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn truncation_out_of_range_is_a_usage_error() {
    assert_eq!(verify(&["borel-ansatz", "--truncation", "2"]).status.code(), Some(2));
}

#[test]
fn json_schema_is_stable() {
    let out = verify(&["r-matrix", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 3);
    for r in &reports {
        let keys: BTreeSet<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, BTreeSet::from(["name", "status", "details", "elapsed_ms", "config"]));
        assert_eq!(r["status"], "pass");
        assert_eq!(r["config"]["truncation"], 16);
    }
}

#[test]
fn seed_does_not_change_outcomes() {
    let statuses = |seed: &str| {
        let out = verify(&["rtt", "--format", "json", "--seed", seed]);
        let code = out.status.code();
        let s: Vec<(String, String)> =
            json_reports(&out).iter().map(|r| (r["name"].as_str().unwrap().to_string(), r["status"].as_str().unwrap().to_string())).collect();
        (code, s)
    };
    let (a, b) = (statuses("7"), statuses("8"));
    assert_eq!(a, b);
    assert_eq!(a.0, Some(0));
}

#[test]
fn export_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(&["borel-rll", "--export", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for name in ["rll_residuals.txt", "rll_relations.txt"] {
        let body = std::fs::read_to_string(dir.path().join(name)).unwrap();
        assert!(!body.trim().is_empty(), "{name} is empty");
    }
}

#[test]
fn unwritable_export_path_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("occupied");
    std::fs::write(&file, "").unwrap();
    let out = verify(&["ybe", "--export", file.join("sub").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn all_reports_every_check_once() {
    let out = verify(&["all", "--format", "json"]);
    let reports = json_reports(&out);
    let names: BTreeSet<&str> = reports.iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), reports.len());
    assert_eq!(reports.len(), ospq::verify::registry().len());
    let failed: Vec<&str> = reports.iter().filter(|r| r["status"] == "fail").map(|r| r["name"].as_str().unwrap()).collect();
    let expected = if failed.is_empty() { 0 } else { 1 };
    assert_eq!(out.status.code(), Some(expected), "failing checks: {failed:?}");
}
