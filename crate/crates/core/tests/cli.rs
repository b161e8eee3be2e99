use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn catdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catdeg"))
        .args(args)
        .env("CATDEG_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = catdeg(&full);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {out:?}");
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn catenary_of_450() {
    let v = json(&["catenary", "11", "36", "39", "450"]);
    assert_eq!(v["catenary"], 16);
    assert_eq!(v["num_factorizations"], 8);
    let z = v["factorizations"].as_array().unwrap();
    assert!(z.contains(&serde_json::json!([6, 2, 8])));
    assert!(z.contains(&serde_json::json!([24, 3, 2])));
}

#[test]
fn catenary_of_175() {
    let v = json(&["catenary", "11", "25", "29", "175"]);
    assert_eq!(v["catenary"], 11);
    assert_eq!(
        v["factorizations"],
        serde_json::json!([[0, 7, 0], [8, 0, 3], [11, 1, 1]])
    );
    let text = stdout(&catdeg(&["catenary", "11", "25", "29", "175"]));
    assert!(text.contains("catenary degree: 11"));
}

#[test]
fn info_reports_betti_elements() {
    let v = json(&["info", "11", "25", "29"]);
    assert_eq!(v["betti"], serde_json::json!([58, 150, 154]));
    assert_eq!(v["betti_catenary"], serde_json::json!([4, 12, 14]));
    assert_eq!(v["frobenius"], 118);
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["info", "30", "52", "55"][..],
        &["scan", "11", "25", "29", "--to", "300"],
        &["betti", "6", "10", "15"],
    ] {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let first = catdeg(&full);
        let second = catdeg(&full);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn invalid_generators_exit_2() {
    for args in [
        &["info", "2", "4"][..],
        &["info", "4", "6"],
        &["info", "0", "3"],
        &["info", "3", "3", "5"],
        &["catenary", "3", "5", "7"],
        &["catenary", "3", "5", "-1"],
        &["info"],
        &["block", "2"],
        &["block", "11"],
        &["family", "arithmetic", "4", "4"],
        &["family", "unique-betti", "2", "4"],
        &["frobnicate"],
    ] {
        let out = catdeg(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {out:?}");
        assert!(!out.stderr.is_empty(), "{args:?} printed no diagnostic");
    }
}

#[test]
fn not_minimal_names_the_witness() {
    let out = catdeg(&["info", "2", "4"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains('4'), "{err}");
}

#[test]
fn unknown_suite_exits_2() {
    let out = catdeg(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_writes_one_row_per_integer() {
    let csv = scratch("scan.csv");
    let svg = scratch("scan.svg");
    let out = catdeg(&[
        "scan",
        "11",
        "25",
        "29",
        "--to",
        "300",
        "--csv",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let table = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "element,catenary,num_factorizations,is_betti");
    assert_eq!(lines.len(), 302);
    assert_eq!(lines[1], "0,0,1,false");
    assert!(lines.contains(&"175,11,3,false"));
    assert!(lines.contains(&"58,4,2,true"));

    let plot = std::fs::read_to_string(&svg).unwrap();
    assert!(plot.starts_with("<svg"));
    assert!(plot.trim_end().ends_with("</svg>"));
    assert_eq!(plot.matches("<circle").count(), 301);
    assert_eq!(plot.matches("<svg").count(), 1);
}

#[test]
fn scan_window_zero() {
    let csv = scratch("zero.csv");
    let out = catdeg(&[
        "scan",
        "3",
        "5",
        "--to",
        "0",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let table = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(table.lines().count(), 2);
}

#[test]
fn scan_summary() {
    let v = json(&["scan", "11", "25", "29", "--to", "300"]);
    let cset: Vec<u64> = serde_json::from_value(v["cset"].clone()).unwrap();
    for c in [0, 4, 9, 10, 11, 12, 14] {
        assert!(cset.contains(&c), "{c} missing from {cset:?}");
    }
    assert_eq!(v["min_nonzero"], 4);
    assert_eq!(v["max"], 14);
    assert_eq!(v["sandwich_checked"], v["sandwich_passed"]);
}

#[test]
fn block_witness_and_sample() {
    let v = json(&["block", "4", "--witness", "2"]);
    assert_eq!(v["order"], 4);
    assert_eq!(v["atom_count"], 7);
    assert_eq!(v["witness"]["catenary"], 2);
    assert_eq!(v["witness"]["factorizations"].as_array().unwrap().len(), 2);

    let v = json(&["block", "5", "--sample", "10"]);
    assert_eq!(v["sample"]["cset"], serde_json::json!([0, 2, 3, 4, 5]));

    let out = catdeg(&["block", "4", "--witness", "2", "--sample", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_commands() {
    let v = json(&["family", "largecat", "5"]);
    assert_eq!(v["generators"], serde_json::json!([11, 25, 29]));
    let v = json(&["family", "unique-betti", "2", "3", "5"]);
    assert_eq!(v["betti"], serde_json::json!([30]));
    let out = catdeg(&["family", "arithmetic", "3", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn delta_command() {
    let v = json(&["delta", "30", "52", "55"]);
    assert_eq!(v["delta"], serde_json::json!([1, 2, 3, 5]));
}

#[test]
fn verify_with_small_k_max() {
    let out = catdeg(&[
        "verify",
        "--suite",
        "paper",
        "--k-max",
        "4",
        "--monoids",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("k = 3..=4"), "{text}");
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn help_exits_0() {
    let out = catdeg(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("catenary"));
}
