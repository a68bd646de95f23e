use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_yangian"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn yangian");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: &str) -> Value {
    let out = run(args, stdin);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn grid_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../grids").join(name)
}

fn factors(ws: &[(&[&str], &str)]) -> String {
    let fs: Vec<Value> = ws.iter().map(|(w, a)| json!({"w": w, "a": a})).collect();
    json!({ "factors": fs }).to_string()
}

#[test]
fn criterion_example() {
    let out = run(&["criterion"], r#"{"factors":[{"w":["1","0"]},{"w":["2","1"]}]}"#);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), r#"{"irreducible":false,"failing_pairs":[[0,1]]}"#);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, json!({"irreducible": false, "failing_pairs": [[0, 1]]}));
}

#[test]
fn oracle_single_factor() {
    let v = ok_json(&["oracle"], r#"{"factors":[{"w":["2","1","0"]}]}"#);
    assert_eq!(v["irreducible"], json!(true));
    assert_eq!(v["singular_dim"], json!(1));
    assert_eq!(v["dim"], json!(8));
}

#[test]
fn gt_info_and_round_trip() {
    let v = ok_json(&["gt-info"], r#"{"w":["2","1","0"]}"#);
    assert_eq!(v["dim"], json!(8));
    let patterns = v["patterns"].as_array().unwrap();
    assert_eq!(patterns.len(), 8);
    assert_eq!(patterns[0], json!([["2", "1", "0"], ["2", "1"], ["2"]]));
    assert_eq!(v["generators"].as_array().unwrap().len(), 9);
    // every emitted rational re-parses to itself
    for p in patterns {
        for row in p.as_array().unwrap() {
            for x in row.as_array().unwrap() {
                let s = x.as_str().unwrap();
                let r = yangian_core::linalg::parse_rational(s).unwrap();
                assert_eq!(yangian_core::linalg::scalar::format_rational(&r), s);
            }
        }
    }
    // a top row taken from the output describes the same module again
    let again = ok_json(&["gt-info"], &json!({"w": patterns[0][0]}).to_string());
    assert_eq!(again, v);
    let half = ok_json(&["gt-info"], r#"{"w":["1/2","-1/2"]}"#);
    assert_eq!(half["patterns"][0], json!([["1/2", "-1/2"], ["1/2"]]));
}

#[test]
fn criterion_and_oracle_agree() {
    let weights: [&[&str]; 5] = [&["0", "0"], &["1", "0"], &["2", "0"], &["2", "1"], &["3", "1"]];
    for lam in weights {
        for mu in weights {
            for a in ["0", "1", "1/2", "-2"] {
                let input = factors(&[(lam, "0"), (mu, a)]);
                let c = ok_json(&["criterion"], &input);
                let o = ok_json(&["oracle"], &input);
                assert_eq!(c["irreducible"], o["irreducible"], "{input}");
            }
        }
    }
}

#[test]
fn witness_output() {
    let v = ok_json(&["witness"], r#"{"factors":[{"w":["1","0"]},{"w":["2","1"]}]}"#);
    assert_eq!(v["p"], json!(1));
    assert_eq!(v["k_list"], json!([1]));
    assert_eq!(v["theta_nonzero"], json!(true));
    assert_eq!(v["theta_in_cyclic_span"], json!(true));
    assert_eq!(v["theta_closure_proper"], json!(true));
    assert_eq!(
        v["theta"],
        json!([{"index": 1, "parts": [0, 1], "value": "-1"}, {"index": 2, "parts": [1, 0], "value": "1"}])
    );
    let out = run(&["witness"], r#"{"factors":[{"w":["1","0"]},{"w":["3","2"]}]}"#);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("satisfies the criterion"));
}

#[test]
fn act_operators() {
    let base = r#"{"factors":[{"w":["1","0"]},{"w":["2","1"]}],"operator":"#;
    let v = ok_json(&["act"], &format!(r#"{base}{{"kind":"T","i":1,"j":0,"u":"-1"}}}}"#));
    assert_eq!(v["result"], json!(["0", "-1", "1", "0"]));
    let v = ok_json(&["act"], &format!(r#"{base}{{"kind":"tau_product","r":1,"a":0,"v":"-1","k":1}}}}"#));
    assert_eq!(v["result"], json!(["0", "-1", "1", "0"]));
    // A_1(u) ζ = (u + 1)(u + 2) ζ
    let v = ok_json(&["act"], &format!(r#"{base}{{"kind":"A","m":1}},"vector":"zeta"}}"#));
    assert_eq!(v["coefficients"], json!([["2", "0", "0", "0"], ["3", "0", "0", "0"], ["1", "0", "0", "0"]]));
    let v = ok_json(&["act"], &format!(r#"{base}{{"kind":"t","i":0,"j":1,"r":1}},"vector":{{"parts":[1,1]}}}}"#));
    assert_eq!(v["result"], json!(["0", "1", "1", "0"]));
    let v = ok_json(
        &["act"],
        &format!(r#"{base}{{"kind":"minor","rows":[0,1],"cols":[0,0],"u":"3"}},"vector":{{"coords":["1","2","3","4"]}}}}"#),
    );
    assert_eq!(v["result"], json!(["0", "0", "0", "0"]));
    let out = run(&["act"], &format!(r#"{base}{{"kind":"B","m":2,"u":"0"}}}}"#));
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["act"], &format!(r#"{base}{{"kind":"X"}}}}"#));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn validate_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = run(
        &["validate", grid_path("n2_exhaustive.json").to_str().unwrap(), "--output", report.to_str().unwrap(), "--workers", "2"],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["cases"], json!(225));
    assert_eq!(summary["disagreements"], json!(0));
    let full: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let records = full["records"].as_array().unwrap();
    assert_eq!(records.len(), 225);
    let first = &records[0];
    for key in ["weights", "shifts", "criterion", "oracle", "dims", "singular_dim", "timing_ms"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn validate_triples_checks_binary_property() {
    let out = run(&["validate", grid_path("n2_triples.json").to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    let full: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(full["summary"]["cases"], json!(256));
    assert_eq!(full["summary"]["binary_exceptions"], json!(0));
}

#[test]
fn cap_refusals_exit_3() {
    let out = run(&["--cap", "10", "oracle"], r#"{"factors":[{"w":["3","0"]},{"w":["3","0"]}]}"#);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["validate", grid_path("n3_shifts.json").to_str().unwrap(), "--cap", "20"], "");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bad_input_exits_1() {
    for (cmd, input) in [
        ("criterion", "{not json"),
        ("criterion", r#"{"factors":[{"w":["0","1"]}]}"#),
        ("criterion", r#"{"factors":[{"w":["1","0"],"extra":1}]}"#),
        ("criterion", r#"{"factors":[{"w":["1.5","0"]}]}"#),
        ("oracle", r#"{"factors":[]}"#),
        ("oracle", r#"{"factors":[{"w":["1","0"]},{"w":["1","0","0"]}]}"#),
        ("gt-info", r#"{"w":[]}"#),
    ] {
        let out = run(&[cmd], input);
        assert_eq!(out.status.code(), Some(1), "{cmd} {input}");
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["no-such-command"], "");
    assert_eq!(out.status.code(), Some(1));
}
