use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn braidalex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidalex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn braidalex_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_braidalex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn poly_methods_agree_on_the_command_line() {
    let mut seen = Vec::new();
    for method in ["seifert", "skein", "burau"] {
        let o = braidalex(&[
            "--json",
            "poly",
            "braid",
            "--braid",
            "3: 1 2 1 2 1 2 1 2",
            "--method",
            method,
        ]);
        assert_eq!(o.status.code(), Some(0));
        seen.push(json(&o)["text"].as_str().unwrap().to_string());
    }
    assert!(
        seen.iter().all(|s| s == "t^3 - t^2 + 1 - t^-2 + t^-3"),
        "{seen:?}"
    );

    let o = braidalex(&["poly", "braid", "--strands", "3", "--word", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("0\n"));

    let o = braidalex(&["--json", "poly", "tree", "--tree", "v(v)(v)(v)"]);
    let v = json(&o);
    assert_eq!(
        (v["alpha"].as_i64(), v["beta"].as_i64()),
        (Some(1), Some(-1))
    );
}

#[test]
fn certify_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t34.json");
    let path_str = path.to_str().unwrap();
    let o = braidalex(&[
        "certify",
        "braid",
        "--braid",
        "3: 1 2 1 2 1 2 1 2",
        "-o",
        path_str,
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(Path::new(&path).exists());

    let o = braidalex(&["--json", "verify-cert", path_str]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["valid"], true);
    assert_eq!(v["degree_doubled"], 6);

    let o = braidalex(&["certify", "tree", "--tree", "v(v(v))(v)"]);
    let o = braidalex_stdin(&["verify-cert", "-"], &stdout(&o));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid"));
}

#[test]
fn tampered_certificates_exit_with_failure() {
    let o = braidalex(&["certify", "braid", "--braid", "3: 1 2 1 2 1 2"]);
    let mut cert: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    cert["certificate"]["child"]["l_minus_b1"] = serde_json::json!(7);
    let o = braidalex_stdin(&["--json", "verify-cert", "-"], &cert.to_string());
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["valid"], false);
    assert_eq!(v["failure"]["path"], "$.child");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let o = braidalex_stdin(&["verify-cert", "-"], "{\"schema\": 1, \"certificate\":");
    assert_eq!(o.status.code(), Some(1));
    let o = braidalex_stdin(
        &["verify-cert", "-"],
        "{\"kind\": \"hopf_base\", \"extra\": 1}",
    );
    assert_eq!(o.status.code(), Some(1));
    let o = braidalex(&["poly", "braid", "--braid", "3: 1 4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = braidalex(&["certify", "braid", "--braid", "3: 1 1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = braidalex(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cables_and_satellites_report_verdicts() {
    let o = braidalex(&["cable", "3", "--companion", "2: 1 1 1 1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("t^6 - t^3 + 1 - t^-3 + t^-6\n"), "{out}");
    assert!(out.trim_end().ends_with("NOT_IN_P"));

    let o = braidalex(&[
        "--json",
        "satellite",
        "--winding",
        "1",
        "--pattern-poly",
        "1",
        "--companion",
        "2: 1 1 1",
    ]);
    assert_eq!(json(&o)["verdict"], "NO_OBSTRUCTION");
}

#[test]
fn sweeps_and_summand_checks() {
    let o = braidalex(&[
        "sweep",
        "--mode",
        "methods",
        "--max-strands",
        "3",
        "--max-len",
        "6",
        "--jobs",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("failures=0"));

    let o = braidalex(&[
        "ito-check",
        "--torus",
        "2,3",
        "--torus",
        "2,5",
        "--torus",
        "3,4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summands=3"));
}
