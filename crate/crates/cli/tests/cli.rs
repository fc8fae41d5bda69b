use std::process::{Command, Output};

use cuspidal::hn::CuspRecord;
use cuspidal_cli::commands::ClassifySummary;

fn cuspidal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspidal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(cuspidal(&["verify-quintic"]).status.code(), Some(0));
    assert_eq!(cuspidal(&["catalog", "--lambda", "9"]).status.code(), Some(2));
    assert_eq!(cuspidal(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cuspidal(&["invariants", "(4,2)"]).status.code(), Some(2));
    assert_eq!(cuspidal(&["classify", "--cusps", "6"]).status.code(), Some(2));
    assert_eq!(cuspidal(&["--help"]).status.code(), Some(0));
}

#[test]
fn reference_commands_match() {
    for args in [&["catalog", "--lambda", "5"][..], &["minimizer"], &["survey"], &["audit", "--case", "e"]] {
        let o = cuspidal(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(!String::from_utf8_lossy(&o.stderr).contains("mismatch"));
    }
}

#[test]
fn invariants_json_round_trips() {
    let o = cuspidal(&["--format", "json", "invariants", "(15,6)(3,2)"]);
    assert!(o.status.success());
    let r: CuspRecord = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((r.m, r.i, r.r), (22, 96, 3));
    assert_eq!(r.to_cusp_type().unwrap().record(), r);
}

#[test]
fn catalog_json_lines() {
    let o = cuspidal(&["--format", "json", "catalog", "--lambda", "3"]);
    let recs: Vec<CuspRecord> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let names: Vec<&str> = recs.iter().map(|r| r.pairs.as_str()).collect();
    assert_eq!(names, ["(4,3)", "(7,2)", "(7,3)", "(6,4)(2,1)", "(10,4)(2,1)"]);
}

#[test]
fn empty_csv_has_header_only() {
    let o = cuspidal(&["--format", "csv", "catalog", "--lambda", "3", "--max-ind", "1/2"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("pairs,"));
}

#[test]
fn classification_is_independent_of_jobs() {
    let a = cuspidal(&["--format", "json", "--jobs", "1", "classify", "--cusps", "4"]);
    let b = cuspidal(&["--format", "json", "--jobs", "3", "classify", "--cusps", "4"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let last = stdout(&a).lines().last().unwrap().to_string();
    let s: ClassifySummary = serde_json::from_str(&last).unwrap();
    assert_eq!(s.survivors, ["b"]);
}

#[test]
fn manifest_is_written() {
    let dir = std::env::temp_dir().join(format!("cuspidal-manifest-{}", std::process::id()));
    let o = cuspidal(&["--manifest", dir.to_str().unwrap(), "expand", "(3,2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[2,1,3]");
    let m: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&dir).unwrap()).unwrap();
    assert_eq!(m["exit_code"], 0);
    assert_eq!(m["output_sha256"].as_str().unwrap().len(), 64);
    std::fs::remove_file(dir).unwrap();
}
