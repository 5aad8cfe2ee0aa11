use std::process::{Command, Output};

use serde_json::Value;

fn qtorus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtorus")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = qtorus(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).expect("valid json"))
}

fn item<'a>(report: &'a Value, name: &str) -> &'a str {
    report["output"].as_array().unwrap().iter().find(|i| i["name"] == name).unwrap_or_else(|| panic!("no item {name}"))
        ["value"]
        .as_str()
        .unwrap()
}

fn status<'a>(report: &'a Value, name: &str) -> &'a str {
    report["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))
        ["status"]
        .as_str()
        .unwrap()
}

#[test]
fn jones_single_color() {
    let o = qtorus(&["jones", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("J(1) = 1\n"));
    let (_, r) = json(&["jones", "--n", "2"]);
    assert_eq!(item(&r, "J(2)"), "t^10 + t^-10");
}

#[test]
fn jones_range_and_negative_colors() {
    let (code, r) = json(&["jones", "--range", "-3..3"]);
    assert_eq!(code, 0);
    assert_eq!(item(&r, "J(0)"), "0");
    let pos = item(&r, "J(3)").to_string();
    let neg = item(&r, "J(-3)");
    assert!(neg.starts_with('-'), "{neg} vs {pos}");
}

#[test]
fn reduce_membership_target() {
    let (code, r) = json(&["reduce", "--target", "C2", "--basis-from", "A2,B2"]);
    assert_eq!(code, 0);
    assert_eq!(item(&r, "remainder"), "0");
    assert_eq!(item(&r, "member"), "true");
    assert_eq!(status(&r, "cofactor identity"), "pass");
}

#[test]
fn reduce_non_member() {
    let (code, r) = json(&["reduce", "--target", "M + 1", "--basis-from", "A2,B2"]);
    assert_eq!(code, 0);
    assert_eq!(item(&r, "member"), "false");
    assert_ne!(item(&r, "remainder"), "0");
}

#[test]
fn bad_usage_exits_two() {
    for args in [&["--no-such-flag"][..], &["jones", "--range", "5..1"], &["frobnicate"]] {
        let o = qtorus(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(qtorus(&["--help"]).status.code(), Some(0));
    assert_eq!(qtorus(&["--version"]).status.code(), Some(0));
}

#[test]
fn json_schema_and_timings_opt_in() {
    let (code, r) = json(&["groebner"]);
    assert_eq!(code, 0);
    for key in ["version", "command", "output", "checks", "summary"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["summary"]["fail"], 0);
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c.get("elapsed_ms").is_none() && c.get("witness").is_none()));
    let (_, timed) = json(&["--timings", "groebner"]);
    assert!(timed["checks"].as_array().unwrap().iter().all(|c| c["elapsed_ms"].is_u64()));
}

#[test]
fn output_is_deterministic() {
    for args in [&["groebner", "--order", "grevlex"][..], &["derive", "--nmax", "5"], &["--json", "jones"]] {
        assert_eq!(qtorus(args).stdout, qtorus(args).stdout, "{args:?}");
    }
}

#[test]
fn derive_reproduces_published_operator_and_dumps_state() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("state.json");
    let (code, r) = json(&["derive", "--compare-paper", "--nmax", "8", "--dump", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(item(&r, "same P as published"), "true");
    assert_eq!(item(&r, "same b0 as published"), "true");
    let state: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entries = state["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| matches!(e["provenance"].as_str(), Some("derived" | "paper"))));
    assert!(entries.iter().any(|e| e["name"] == "P"));
}

#[test]
fn poly_file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let gens = dir.path().join("gens.txt");
    std::fs::write(&gens, "# the Diophantine pair\nA2\nB2\n").unwrap();
    let (code, r) = json(&["groebner", "--poly-file", gens.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(status(&r, "conversion"), "pass");

    let target = dir.path().join("target.txt");
    std::fs::write(&target, "t^2*M - 1\n").unwrap();
    let (_, r) = json(&["reduce", "--poly-file", target.to_str().unwrap(), "--basis-from", "t^2*M - 1"]);
    assert_eq!(item(&r, "remainder"), "0");

    let missing = dir.path().join("absent.txt");
    let o = qtorus(&["reduce", "--poly-file", missing.to_str().unwrap(), "--basis-from", "M"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_alpha_and_published_operator() {
    let (code, r) = json(&["verify", "--operator", "P", "--nmax", "6"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(status(&r, "annihilation-pointwise"), "pass");
    // alpha annihilates J but is not sigma-symmetric
    let (code, r) = json(&["verify", "--operator", "alpha", "--nmax", "6"]);
    assert_eq!(code, 1);
    assert_eq!(status(&r, "sigma-fixed"), "fail");
}

/// The first row of the published conversion matrix has the wrong sign on
/// its first entry, so this command reports exactly one failure.
#[test]
fn verify_paper_flags_only_the_conversion_sign() {
    let (code, r) = json(&["verify-paper", "--nmax", "10"]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] != "pass")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed.len(), 1, "{failed:?}");
    assert!(failed[0].contains("row 1"), "{failed:?}");
}
