use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use blockalg::criterion::Report;
use serde_json::Value;

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn fixture(name: &str) -> String {
    dir().join("fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Compares stdout with `tests/golden/<name>`; `BLESS=1` rewrites the file.
fn golden(name: &str, args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let path = dir().join("golden").join(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out, want, "golden mismatch for {name}");
    out
}

#[test]
fn analyze_golden() {
    let out = golden("analyze_geometric2.txt", &["analyze", &fixture("geometric2.json")]);
    assert!(out.starts_with("verdict: REDUCIBLE\n"));
    assert!(out.contains("witness: t^2 - 4t + 4\n"));
    golden("analyze_geometric2.json", &["--format", "json", "analyze", &fixture("geometric2.json")]);
    let out = golden("analyze_zero.txt", &["analyze", &fixture("zero.json")]);
    assert!(out.contains("witness: 1\n"));
    let out = golden("analyze_charge1.txt", &["analyze", &fixture("charge1.json"), "--max-deg", "6"]);
    assert!(out.starts_with("verdict: IRREDUCIBLE-UP-TO(6)\n"));
    golden("analyze_lambda1.txt", &["analyze", &fixture("lambda1_1.json")]);
    golden("analyze_mixed.txt", &["analyze", &fixture("mixed.json"), "--j-set", "-1,0,3", "--terms", "16"]);
    let out = golden("analyze_mixed_reducible.json", &["analyze", &fixture("mixed_reducible.json"), "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["witness_text"], "t^4 - 2t^3 + 3t^2 - 2t + 1");
}

#[test]
fn act_golden() {
    let out = golden("act_lambda1_5.txt", &["act", &fixture("lambda1_5.json"), "L[1,0].L[-1,0].v"]);
    assert_eq!(out, "-10 v\n");
    golden("act_lambda1_5.json", &["--format", "json", "act", &fixture("lambda1_5.json"), "L[1,0].L[-1,0].v"]);
    let out = golden("act_bracket.txt", &["act", &fixture("zero.json"), "[L[1,0], L[-1,0]]"]);
    assert_eq!(out, "-2 L[0,0]\n");
    golden(
        "act_words.txt",
        &["act", &fixture("geometric2.json"), "L[2,0].L[-1,0].L[-1,1].v - 2 L[0,3].v + 1/3 L[-2,1].v"],
    );
}

#[test]
fn series_golden() {
    let out = golden("series_charge1.txt", &["series", &fixture("charge1.json"), "--j", "2", "--terms", "3"]);
    assert!(out.starts_with("[0, 0, -1, 0]\n"));
    golden("series_charge1.json", &["series", &fixture("charge1.json"), "--j", "2", "--terms", "3", "--format", "json"]);
    golden("series_geometric2.txt", &["series", &fixture("geometric2.json"), "--j-set", "-2..2", "--terms", "6"]);
}

#[test]
fn order_golden() {
    let out = golden("order_embedding.txt", &["order", &fixture("embedding_sqrt2.json")]);
    assert!(out.starts_with("dense, archimedean;"));
    golden("order_embedding.json", &["order", &fixture("embedding_sqrt2.json"), "--format", "json"]);
    let out = golden("order_lex2.txt", &["order", &fixture("lex2.json")]);
    assert!(out.starts_with("discrete, non-archimedean;"));
    let out = golden("order_standard1.txt", &["order", &fixture("standard1.json")]);
    assert!(out.contains("minimal positive element 1\n"));
}

#[test]
fn json_report_round_trips() {
    for f in ["geometric2.json", "zero.json", "charge1.json", "mixed.json", "mixed_reducible.json"] {
        let o = run(&["--format", "json", "analyze", &fixture(f)]);
        let text = stdout(&o);
        let report: Report = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(serde_json::from_str::<Value>(&again).unwrap(), serde_json::from_str::<Value>(&text).unwrap());
        let t = run(&["analyze", &fixture(f)]);
        assert_eq!(stdout(&t), report.to_string());
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["analyze", &fixture("malformed.json")]), Some(2));
    assert_eq!(code(&["analyze", &fixture("no_such_file.json")]), Some(2));
    assert_eq!(code(&["analyze", &fixture("zero.json"), "--j-set", "1..x"]), Some(2));
    assert_eq!(code(&["analyze", &fixture("zero.json"), "--max-deg", "lots"]), Some(2));
    assert_eq!(code(&["order", &fixture("bad_order.json")]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["analyze", &fixture("geometric2.json"), "--window", "3"]), Some(3));
    assert_eq!(code(&["analyze", &fixture("geometric2.json"), "--window", "1000"]), Some(0));
    assert_eq!(code(&["analyze", &fixture("charge1.json")]), Some(0));

    let o = run(&["act", &fixture("zero.json"), "L[1,0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 1, column 6"), "{err}");
}

#[test]
fn window_error_is_reported() {
    let o = run(&["analyze", &fixture("geometric2.json"), "--window", "3"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("window-insufficient"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn weight_files_from_temp_dir() {
    let tmp = tempfile::tempdir().unwrap();
    let p = tmp.path().join("w.json");
    std::fs::write(&p, r#"{"central_charge": 0, "recurrent": {"char_poly": [-3, 1], "initial": {"0": 1}}}"#).unwrap();
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert!(stdout(&o).contains("witness: t^2 - 6t + 9\n"));
    std::fs::write(&p, r#"{"central_charge": "1/0"}"#).unwrap();
    assert_eq!(run(&["analyze", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn selftest_summary() {
    let o = run(&["selftest", "--seed", "7", "--trials", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["overall"], "PASS");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true && c["seed"] == 7));
}
