use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn seqinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqinv")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = seqinv(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn build(seq: &str, budget: &str, dir: &Path) -> String {
    let path = dir.join(format!("{seq}.json")).display().to_string();
    let out = seqinv(&["automaton", "--seq", seq, "--budget", budget, "--out", &path]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/statements/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn terms_as_json_and_csv() {
    let v = ok_json(&["terms", "--seq", "c3", "--count", "20"]);
    let want = [0, 1, 1, 1, 1, 2, 2, 0, 2, 1, 2, 0, 2, 1, 2, 2, 0, 2, 1, 1];
    assert_eq!(v, serde_json::json!(want));
    let out = seqinv(&["--csv", "terms", "--seq", "t3", "--count", "4"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "index,coefficient\n0,0\n1,1\n2,2\n3,1\n");
    let v = ok_json(&["terms", "--seq", "c3", "--count", "50", "--method", "recurrence"]);
    assert_eq!(v, ok_json(&["terms", "--seq", "c3", "--count", "50"]));
}

#[test]
fn usage_errors_exit_nonzero() {
    for args in [
        &["--bogus"][..],
        &["terms", "--seq", "q7"],
        &["terms"],
        &["analyze", "nothing"],
        &["reproduce-paper", "--only", "14"],
    ] {
        let out = seqinv(args);
        assert!(!out.status.success(), "{args:?} succeeded");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn synthesis_sync_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let a3 = build("c3", "65536", dir.path());
    let v = ok_json(&["analyze", "sync", "--machine", &a3, "--max-len", "4"]);
    assert_eq!(v["shortest"]["words"], serde_json::json!(["12"]));
    let v = ok_json(&["analyze", "structure", "--machine", &a3]);
    assert_eq!(v["level_sizes"], serde_json::json!([[1], [3, 3], [20], [1]]));

    let dot = dir.path().join("a3.dot").display().to_string();
    assert!(seqinv(&["export", "--machine", &a3, "--out", &dot]).status.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[label=\"(")).count(), 28);
    let back = dir.path().join("back.json").display().to_string();
    assert!(seqinv(&["export", "--machine", &dot, "--format", "json", "--out", &back]).status.success());
    let a: Value = serde_json::from_str(&std::fs::read_to_string(&a3).unwrap()).unwrap();
    let b: Value = serde_json::from_str(&std::fs::read_to_string(&back).unwrap()).unwrap();
    let tables = |v: &Value| v["states"].as_array().unwrap().iter().map(|s| (s["out"].clone(), s["next"].clone())).collect::<Vec<_>>();
    assert_eq!(tables(&a), tables(&b));
}

#[test]
fn verify_statement_files() {
    let dir = tempfile::tempdir().unwrap();
    let av = build("v", "65536", dir.path());
    let statement = format!("@{}", fixture("v_zero_in_window.txt"));
    let v = ok_json(&["verify", "--statement", &statement, "--machine", &av, "--brute-below", "2000"]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["brute_force_counterexample"], Value::Null);

    let out = seqinv(&["verify", "--statement", "forall n : v[4n+2] = 0", "--machine", &format!("v={av}")]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["holds"], false);
    assert!(v["counterexample"].is_u64());

    let out = seqinv(&["verify", "--statement", "forall n : w[n] = 0", "--machine", &format!("v={av}")]);
    assert!(!out.status.success());
}

#[test]
fn family_count_and_bipartite() {
    let dir = tempfile::tempdir().unwrap();
    let au = build("u", "131072", dir.path());
    let rows = ok_json(&["family", "--machine", &au, "--affine", "79,1,0,0", "--offsets", "0..1"]);
    assert_eq!(rows[0]["constant"], 0);
    let v = ok_json(&["analyze", "bipartite", "--machine", &au]);
    assert_eq!(v["bipartite"], true);
    assert_eq!(v["sizes"], serde_json::json!([12, 11]));

    let t3 = build("t3", "65536", dir.path());
    let v = ok_json(&["count", "--machine", &t3, "--bound", "729"]);
    assert_eq!(v["counts"], serde_json::json!(["243", "243", "243"]));
}

#[test]
fn runs_and_probe() {
    let v = ok_json(&["analyze", "runs", "--seq", "c3", "--count", "100000"]);
    assert_eq!(v["letters"][1]["length"], 4);
    assert_eq!(v["nonzero"]["length"], 7);
    let v = ok_json(&["probe", "--p", "5", "--below", "1000", "--terms", "10000"]);
    assert_eq!(v["vanishing"]["counterexamples"], serde_json::json!([]));
    assert_eq!(v["machine"]["status"], "unavailable");
}

#[test]
fn oeis_comparison() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "# c3\n0 0\n1 1\n2 1\n3 1\n4 1\n5 2\n").unwrap();
    let v = ok_json(&["oeis", "--bfile", good.to_str().unwrap(), "--seq", "c3"]);
    assert_eq!(v["agreed"], 6);
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 0\n1 2\n").unwrap();
    let out = seqinv(&["oeis", "--bfile", bad.to_str().unwrap(), "--seq", "c3"]);
    assert!(!out.status.success());
    let gap = dir.path().join("gap.txt");
    std::fs::write(&gap, "0 0\n2 1\n").unwrap();
    let out = seqinv(&["oeis", "--bfile", gap.to_str().unwrap(), "--seq", "c3"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"));
}

#[test]
fn reproduce_selected_criteria() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "cross_terms = 500\nresidual_order = 512\ncomposition_order = 256\n").unwrap();
    let v = ok_json(&["--config", cfg.to_str().unwrap(), "reproduce-paper", "--only", "1,2,3"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["status"] == "pass"));
    std::fs::write(&cfg, "cross_terms = nope\n").unwrap();
    assert!(!seqinv(&["--config", cfg.to_str().unwrap(), "reproduce-paper", "--only", "1"]).status.success());
}
