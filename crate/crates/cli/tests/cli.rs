//! Drives the `tq` binary: output formats, exit codes, determinism.

use std::process::{Command, Output};

fn tq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tq")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn counts_for_d4() {
    let out = tq(&["counts", "--type", "D", "--rank", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "vertices=20 arrows=32\n");
}

#[test]
fn counts_csv_lists_both_sources() {
    let out = tq(&["counts", "--type", "A", "--rank", "4", "--format", "csv"]);
    assert_eq!(stdout(&out), "type,rank,vertices,arrows,source\nA,4,14,21,enumeration\nA,4,14,21,closed-form\n");
}

#[test]
fn d3_is_flagged_as_a3() {
    let out = tq(&["counts", "--type", "d", "--rank", "3"]);
    assert_eq!(stdout(&out), "vertices=5 arrows=5\nnote: D3 is A3\n");
}

#[test]
fn a3_graph_as_dot() {
    let out = tq(&["graph", "--type", "A", "--rank", "3", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph tilting {"));
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 5);
    assert_eq!(text.lines().filter(|l| l.contains(" -> ")).count(), 5);
}

#[test]
fn graph_json_has_sorted_arrows() {
    let out = tq(&["graph", "--type", "D", "--rank", "4", "--orientation", "010", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let arrows = v["arrows"].as_array().unwrap();
    assert_eq!(arrows.len(), 32);
    let pairs: Vec<(u64, u64)> = arrows.iter().map(|a| (a[0].as_u64().unwrap(), a[1].as_u64().unwrap())).collect();
    let mut sorted = pairs.clone();
    sorted.sort();
    assert_eq!(pairs, sorted);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 20);
}

#[test]
fn enumerate_lists_every_module() {
    let out = tq(&["enumerate", "--type", "A", "--rank", "4", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().count(), 15);
    let out = tq(&["enumerate", "--type", "A", "--rank", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|n| n["delta"] == 2));
}

#[test]
fn reflect_scan_over_all_a4_orientations() {
    let out = tq(&["reflect-scan", "--type", "A", "--rank", "4", "--orientation", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.ends_with("vertices=14 arrows=21")).count(), 8);
    assert!(text.ends_with("distinct=1\n"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["counts", "--type", "A", "--rank", "13"][..],
        &["counts", "--type", "D", "--rank", "2"],
        &["counts", "--type", "A", "--rank", "3", "--orientation", "101"],
        &["counts", "--type", "A", "--rank", "3", "--orientation", "2x"],
        &["graph", "--type", "A", "--rank", "3", "--orientation", "all"],
        &["counts", "--type", "E", "--rank", "6"],
        &["verify", "--suite", "nope"],
        &["verify", "--max-rank", "10"],
    ] {
        assert_eq!(tq(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn thread_cap_does_not_change_output() {
    let capped = Command::new(env!("CARGO_BIN_EXE_tq"))
        .args(["graph", "--type", "A", "--rank", "5", "--format", "json"])
        .env("TQ_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(capped.stdout, tq(&["graph", "--type", "A", "--rank", "5", "--format", "json"]).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_tq")).args(["verify", "--max-rank", "2"]).env("TQ_THREADS", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_report_is_json() {
    let out = tq(&["verify", "--suite", "counts", "--max-rank", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["suite"], "counts");
    assert!(v["records"].as_array().unwrap().iter().any(|r| r["check"] == "closed-form-counts" && r["instance"] == "D4"));
}
