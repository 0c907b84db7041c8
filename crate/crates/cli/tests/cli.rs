use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-sum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON value per line"))
        .collect()
}

fn spec(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn d12(dir: &TempDir) -> PathBuf {
    spec(dir, "d12.json", r#"{"family":"dihedral","order":12}"#)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn group_info_reports_order_center_and_classes() {
    let dir = TempDir::new().unwrap();
    let p = d12(&dir);
    let o = run(&["group-info", "--spec", s(&p), "--json"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["order"], 12);
    assert_eq!(v["center"], serde_json::json!(["1", "a^3"]));
    assert_eq!(v["class_count"], 6);
}

#[test]
fn classes_and_subgroups_are_json_lines() {
    let dir = TempDir::new().unwrap();
    let p = spec(&dir, "v8.json", r#"{"family":"v8n","n":1}"#);
    let classes = json_lines(&run(&["classes", "--spec", s(&p), "--json"]));
    assert_eq!(classes.len(), 5);
    assert_eq!(classes[0]["elements"], serde_json::json!(["1"]));
    let subs = json_lines(&run(&["subgroups", "--spec", s(&p), "--json"]));
    let order2 = subs.iter().filter(|v| v["order"] == 2).count();
    assert_eq!(order2, 5);
    assert!(subs.iter().all(|v| v["normal"].is_boolean()));
}

#[test]
fn witness_for_the_central_subgroup_of_d12() {
    let dir = TempDir::new().unwrap();
    let p = d12(&dir);
    let o = run(&["witness", "--spec", s(&p), "--subgroup", "a^3", "--kind", "perfect", "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = &json_lines(&o)[0];
    assert_eq!(v["witness_or_null"].as_array().unwrap().len(), 5);
    assert_eq!(v["verified"], true);
    assert_eq!(v["criteria"]["xh"], true);
    assert_eq!(v["criteria"]["xH"], false);

    let o = run(&["witness", "--spec", s(&p), "--subgroup", "a", "--kind", "perfect", "--json"]);
    assert!(o.status.success());
    assert!(json_lines(&o)[0]["witness_or_null"].is_null());
}

#[test]
fn graph_and_codes_with_class_selectors() {
    let dir = TempDir::new().unwrap();
    let p = d12(&dir);
    // class 5 of D12 is {ab, a^3b, a^5b}
    let o = run(&["graph", "--spec", s(&p), "--x", "a,a^5,class:5", "--json"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["edges"], 30);
    assert_eq!(v["connected"], true);
    assert_eq!(v["connectivity_criterion"], true);
    assert_eq!(v["regular"], true);

    let o = run(&[
        "codes", "--spec", s(&p), "--x", "a,a^5,ab,a^3b,a^5b", "--kind", "perfect", "--json",
    ]);
    let codes: Vec<Value> = json_lines(&o).into_iter().map(|v| v["code"].clone()).collect();
    assert!(codes.contains(&serde_json::json!(["1", "a^3"])));
}

#[test]
fn dot_export_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = d12(&dir);
    let out1 = dir.path().join("a.dot");
    let out2 = dir.path().join("b.dot");
    for out in [&out1, &out2] {
        let o = run(&[
            "export-dot", "--spec", s(&p), "--x", "a,a^5,ab,a^3b,a^5b", "--highlight", "1,a^3", "-o",
            s(out),
        ]);
        assert!(o.status.success());
    }
    let a = fs::read(&out1).unwrap();
    assert_eq!(a, fs::read(&out2).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.matches(" -- ").count(), 30);
    assert_eq!(text.matches("fillcolor").count(), 2);
}

#[test]
fn identical_invocations_give_identical_output() {
    let dir = TempDir::new().unwrap();
    let p = spec(&dir, "corpus.json", r#"[{"family":"cyclic","order":6},{"family":"dihedral","order":8},{"family":"quaternion"}]"#);
    let args = ["verify", "--suite", "all", "--corpus", s(&p), "--json"];
    let a = run(&args);
    let b = run(&["--verbose"].iter().copied().chain(args).chain(["--threads", "1"]).collect::<Vec<_>>());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stderr.is_empty());
    assert!(!b.stderr.is_empty());
}

#[test]
fn verify_exit_codes_follow_the_suites() {
    let o = run(&["verify", "--suite", "quotient", "--max-order", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS quotient"));

    // S4 with its Klein four subgroup breaks the xh equivalence.
    let dir = TempDir::new().unwrap();
    let p = spec(&dir, "s4.json", r#"[{"family":"symmetric","k":4}]"#);
    let report = dir.path().join("r.jsonl");
    let o = run(&["verify", "--suite", "xh", "--corpus", s(&p), "--report", s(&report), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = &json_lines(&o)[0];
    assert_eq!(v["passed"], false);
    assert_eq!(v["failures"].as_array().unwrap().len(), 1);
    let records: Vec<Value> = fs::read_to_string(&report)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    // 30 subgroups, two kinds each
    assert_eq!(records.len(), 2 * 30);
    let bad: Vec<_> = records.iter().filter(|r| r["verified"] == false).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["subgroup_elements"].as_array().unwrap().len(), 4);
}

#[test]
fn census_reports_and_writes_csv() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("c.csv");
    let o = run(&["v8n-census", "--n", "1", "--kind", "total", "--csv", s(&csv), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["matches"], true);
    assert_eq!(v["found"].as_array().unwrap().len(), 4);
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next(), Some("classes,connection_set,connected,codes"));
    // 4 non-identity classes
    assert_eq!(text.lines().count(), 1 + 16);

    // The exit code tracks whether the census matched the classification.
    let o = run(&["v8n-census", "--n", "1", "--kind", "perfect", "--json"]);
    let v = &json_lines(&o)[0];
    assert_eq!(o.status.code(), Some(if v["matches"] == true { 0 } else { 1 }));

    let o = run(&["v8n-census", "--n", "5", "--kind", "total"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let p = d12(&dir);
    for args in [
        vec!["bogus"],
        vec!["group-info", "--spec", s(&p), "--frobnicate"],
        vec!["codes", "--spec", s(&p), "--x", "a", "--kind", "weird"],
        vec!["graph", "--spec", s(&p), "--x", "b"],
        vec!["graph", "--spec", s(&p), "--x", "class:40"],
        vec!["graph", "--spec", s(&p), "--x", "a,zz"],
        vec!["graph", "--spec", "/nonexistent.json", "--x", "a"],
        vec!["verify", "--suite", "nope"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let bad = spec(&dir, "bad.json", r#"{"family":"dihedral","n":12}"#);
    assert_eq!(run(&["group-info", "--spec", s(&bad)]).status.code(), Some(2));
}

#[test]
fn identity_needs_the_flag() {
    let dir = TempDir::new().unwrap();
    let p = spec(&dir, "z4.json", r#"{"family":"cyclic","order":4}"#);
    assert_eq!(run(&["graph", "--spec", s(&p), "--x", "0,2"]).status.code(), Some(2));
    let o = run(&["graph", "--spec", s(&p), "--x", "0,2", "--allow-identity", "--json"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["connection_set"], serde_json::json!(["0", "2"]));
}
