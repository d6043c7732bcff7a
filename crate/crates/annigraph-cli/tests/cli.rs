//! Command-line behavior: output formats and exit codes.

use std::process::Command;

fn annigraph(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_annigraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = annigraph(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn info_text_and_json() {
    let text = stdout(&["info", "Z12"]);
    assert!(text.contains("order: 12"));
    assert!(text.contains("toroidal"));

    let json = stdout(&["info", "Z12", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["order"], 12);
    assert_eq!(v["is_local"], false);
    assert_eq!(v["minimal_prime_orders"], serde_json::json!([4, 6]));
}

#[test]
fn graph_export_formats() {
    let dot = stdout(&["graph", "Z6"]);
    assert_eq!(dot, "graph {\n  \"2\" -- \"3\";\n  \"3\" -- \"4\";\n}\n");

    let json = stdout(&["graph", "Z6", "--format", "json"]);
    assert_eq!(
        json,
        "{\"vertices\":[\"2\",\"3\",\"4\"],\"edges\":[[0,1],[1,2]]}\n"
    );

    // the zero-divisor graph of Z16 is sparser than AG(Z16) = K7
    let ag: serde_json::Value =
        serde_json::from_str(&stdout(&["graph", "Z16", "--format", "json"])).unwrap();
    let zg: serde_json::Value = serde_json::from_str(&stdout(&[
        "graph",
        "Z16",
        "--format",
        "json",
        "--zero-divisor-graph",
    ]))
    .unwrap();
    assert_eq!(ag["edges"].as_array().unwrap().len(), 21);
    assert!(zg["edges"].as_array().unwrap().len() < 21);
}

#[test]
fn genus_json_carries_a_rotation_witness() {
    let json = stdout(&["genus", "Z49", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["genus"], 1);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["rotation"].as_array().unwrap().len(), 6);
}

#[test]
fn genus_exit_codes() {
    // answered: exit 0
    assert!(annigraph(&["genus", "Z49"]).status.success());
    // inconclusive under a tiny budget: exit 3
    let out = annigraph(&["genus", "F5 x F5", "--node-limit", "4"]);
    assert_eq!(out.status.code(), Some(3));
    // parse error: exit 2
    let out = annigraph(&["genus", "Z6["]);
    assert_eq!(out.status.code(), Some(2));
    // a field has no annihilator graph: exit 2
    let out = annigraph(&["genus", "F8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let dir = std::env::temp_dir().join(format!("annigraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    // a failing corpus: Z49 expected planar
    let bad = dir.join("bad.jsonl");
    std::fs::write(
        &bad,
        r#"{"expr":"Z49","expected":{"planar":true,"toroidal":false,"genus":0,"shape":null},"source":"wrong"}"#,
    )
    .unwrap();
    let out = annigraph(&["verify", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // a passing corpus
    let good = dir.join("good.jsonl");
    std::fs::write(
        &good,
        r#"{"expr":"Z6","expected":{"planar":true,"toroidal":false,"genus":0,"shape":null},"source":"path"}"#,
    )
    .unwrap();
    let out = annigraph(&["verify", "--corpus", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // an empty corpus verifies vacuously with exit 0
    let empty = dir.join("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    let out = annigraph(&["verify", "--corpus", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // an inconclusive run: a starved node budget on a ring whose graph
    // needs a real search (AG(F5 x F5) = K_{4,4})
    let hungry = dir.join("hungry.jsonl");
    std::fs::write(
        &hungry,
        r#"{"expr":"F5 x F5","expected":{"planar":false,"toroidal":true,"genus":1,"shape":null},"source":"budget"}"#,
    )
    .unwrap();
    let out = annigraph(&[
        "verify",
        "--corpus",
        hungry.to_str().unwrap(),
        "--node-limit",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));

    // unknown report extension: exit 2
    let out = annigraph(&["verify", "--report", dir.join("r.xml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn survey_smoke() {
    let out = annigraph(&["survey", "--max-order", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| `Z16` | 16 | toroidal |"));
    assert!(text.contains("0 mismatches, 0 inconclusive"));
}

#[test]
fn csv_report_quotes_exprs_with_commas() {
    let dir = std::env::temp_dir().join(format!("annigraph-csv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("c.jsonl");
    std::fs::write(
        &corpus,
        r#"{"expr":"Z2[x,y]/(x^2, x*y, y^2)","expected":{"planar":true,"toroidal":false,"genus":0,"shape":"K3"},"source":"quoting, with commas"}"#,
    )
    .unwrap();
    let report = dir.join("out.csv");
    let out = annigraph(&[
        "verify",
        "--corpus",
        corpus.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("\"Z2[x,y]/(x^2, x*y, y^2)\""));
    assert!(text.contains("\"quoting, with commas\""));
    std::fs::remove_dir_all(&dir).ok();
}
