use std::process::{Command, Output};

use serde_json::Value;

fn genocchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genocchi")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn numbers_tables() {
    let out = genocchi(&["numbers", "--family", "genocchi", "--max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().last(), Some("8 17"));
    assert_eq!(stdout(&out).lines().count(), 9);

    let out = genocchi(&["numbers", "--family", "bernoulli", "--max", "0"]);
    assert_eq!(stdout(&out), "0 1\n");

    let out = genocchi(&["numbers", "--family", "euler", "--max", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,value\n0,1/1\n1,-1/2\n");

    let v = json(&genocchi(&["numbers", "--family", "euler", "--max", "1", "-f", "json"]));
    assert_eq!(v["family"], "euler");
    assert_eq!(v["values"][1]["n"], 1);
    assert_eq!(v["values"][1]["value"], "-1/2");
}

#[test]
fn polynomial_table() {
    let out = genocchi(&["poly", "--family", "genocchi", "--max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("G_4(x) = 4x^3 - 6x^2 + 1"));
}

#[test]
fn expansions() {
    let out = genocchi(&["expand", "--poly", "0,1", "--basis", "genocchi"]);
    assert_eq!(stdout(&out), "a_1 = 1/2\na_2 = 1/2\n");

    let out = genocchi(&["expand", "--poly", "1", "--basis", "bernoulli"]);
    assert_eq!(stdout(&out), "a_0 = 1\n");

    let v = json(&genocchi(&["expand", "--poly=-1,2", "--basis", "genocchi", "-f", "json"]));
    assert_eq!(v["basis"], "genocchi");
    assert_eq!(v["start"], 1);
    assert_eq!(v["coefficients"], serde_json::json!(["0/1", "1/1"]));
}

#[test]
fn matrices() {
    let out = genocchi(&["matrix", "--n", "2", "--format", "latex"]);
    assert_eq!(
        stdout(&out),
        "\\begin{pmatrix}\n1 & -1 & 0 \\\\\n0 & 2 & -3 \\\\\n0 & 0 & 3\n\\end{pmatrix}\n"
    );

    let v = json(&genocchi(&["matrix", "--n", "0", "-f", "json"]));
    assert_eq!(v["entries"], serde_json::json!([["1/1"]]));
    assert_eq!(v["metadata"]["discrepancies"], serde_json::json!([]));

    let v = json(&genocchi(&["matrix", "--n", "3", "-f", "json"]));
    let column: Vec<&str> = (0..4).map(|i| v["entries"][i][3].as_str().unwrap()).collect();
    assert_eq!(column, ["1/1", "0/1", "-6/1", "4/1"]);
    let d = &v["metadata"]["discrepancies"][0];
    assert_eq!((d["row"].as_u64(), d["column"].as_u64()), (Some(1), Some(4)));
    assert_eq!((d["printed"].as_str(), d["computed"].as_str()), (Some("-1/1"), Some("1/1")));
}

#[test]
fn integral_grids() {
    let out = genocchi(&["integrals", "--kind", "T", "--m-max", "2", "--n-max", "2"]);
    assert!(stdout(&out).lines().any(|l| l == "T(1,1) = 1/2"));

    let out = genocchi(&["integrals", "--kind", "I", "--m-max", "1", "--n-max", "0"]);
    assert!(stdout(&out).lines().any(|l| l == "I(1,0) = 0"));

    let out = genocchi(&["integrals", "--kind", "J", "--m-max", "0", "--n-max", "0"]);
    assert_eq!(stdout(&out), "J(0,0) = 1\n");
}

#[test]
fn verify_reports() {
    let out = genocchi(&["verify", "--suite", "foundation", "--max-n", "20"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["metadata"]["suite"], "foundation");
    assert_eq!(v["metadata"]["max_n"], 20);
    for record in v["reports"].as_array().unwrap() {
        for key in ["identity", "reading", "n", "status", "residual"] {
            assert!(record.get(key).is_some(), "missing {key}");
        }
    }
    assert!(v["summary"].as_array().unwrap().iter().all(|s| !s["exact_readings"].as_array().unwrap().is_empty()));

    let out = genocchi(&["verify", "--suite", "all", "--max-n", "2"]);
    let v = json(&out);
    let all_hold = v["summary"].as_array().unwrap().iter().all(|s| !s["exact_readings"].as_array().unwrap().is_empty());
    assert_eq!(out.status.code(), Some(if all_hold { 0 } else { 1 }));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = genocchi(&["verify", "--suite", "foundation", "--max-n", "3", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["metadata"]["max_n"], 3);
}

#[test]
fn usage_errors_exit_2() {
    let out = genocchi(&["numbers", "--family", "fibonacci"]);
    assert_eq!(out.status.code(), Some(2));

    let out = genocchi(&["expand", "--poly", "1,abc", "--basis", "euler"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("abc"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing/report.json");
    let out = genocchi(&["verify", "--suite", "foundation", "--max-n", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    assert_eq!(genocchi(&[]).status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["numbers", "--family", "bernoulli", "--max", "30", "-f", "json"];
    assert_eq!(genocchi(&args).stdout, genocchi(&args).stdout);
}
