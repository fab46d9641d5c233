//! Command-line behavior: argument and file input, output formats, limits,
//! and the exit-code contract.

use std::fs;
use std::process::{Command, Output};

fn nullpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nullpart"))
        .args(args)
        .env_remove("NULLPART_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn check_exit_codes_and_text() {
    let out = nullpart(&["check", "1", "3", "5", "2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "non-partitionable; det = -51975\n");

    let out = nullpart(&["check", "1", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("partitionable: {2} | {1}"));

    let out = nullpart(&["check", "1", "2", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("partitionable: {3} | {1,2}"));
}

#[test]
fn check_json_report() {
    let out = nullpart(&["check", "1", "3", "5", "2", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["partitionable"], false);
    assert_eq!(v["det"], "-51975");
    assert_eq!(v["verdicts_agree"], true);
    assert!(v.get("witness").is_none());

    let out = nullpart(&["check", "1", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["witness"]["side"], "{2}");
    assert_eq!(v["witness"]["complement"], "{1}");
}

#[test]
fn weights_can_come_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weights.txt");
    fs::write(&path, "# golden example\n1\n3\n5   # five\n2\n").unwrap();
    let out = nullpart(&["check", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "non-partitionable; det = -51975\n");
}

#[test]
fn negative_weights_parse_as_values() {
    let out = nullpart(&["check", "-1", "-1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("partitionable"));
}

#[test]
fn parse_errors_exit_64() {
    assert_eq!(code(&nullpart(&["check", "1", "x"])), 64);
    assert_eq!(code(&nullpart(&["check"])), 64);
    assert_eq!(code(&nullpart(&["frobnicate", "1"])), 64);
    assert_eq!(code(&nullpart(&["check", "1", "2", "--format", "yaml"])), 64);
    assert_eq!(code(&nullpart(&["det", "1", "2", "--format", "csv"])), 64);
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.txt");
    assert_eq!(
        code(&nullpart(&["check", "--file", missing.to_str().unwrap()])),
        64
    );
}

#[test]
fn limits_exit_65() {
    let fifteen: Vec<String> = (0..15).map(|i| (i + 1).to_string()).collect();
    let mut args = vec!["check"];
    args.extend(fifteen.iter().map(|s| s.as_str()));
    assert_eq!(code(&nullpart(&args)), 65);

    // Tightened limit via flag.
    assert_eq!(code(&nullpart(&["check", "1", "2", "3", "--max-n", "2"])), 65);
    assert_eq!(code(&nullpart(&["check", "--max-n", "0", "1"])), 64);
}

#[test]
fn env_var_sets_the_default_limit() {
    let run = |envs: &[(&str, &str)], args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_nullpart"));
        cmd.args(args).env_remove("NULLPART_MAX_N");
        for (k, v) in envs {
            cmd.env(k, v);
        }
        cmd.output().unwrap()
    };
    let out = run(&[("NULLPART_MAX_N", "3")], &["check", "1", "3", "5", "2"]);
    assert_eq!(code(&out), 65);
    // An explicit flag outranks the environment.
    let out = run(
        &[("NULLPART_MAX_N", "3")],
        &["check", "1", "3", "5", "2", "--max-n", "4"],
    );
    assert_eq!(code(&out), 1);
    // Junk in the environment is a usage error.
    let out = run(&[("NULLPART_MAX_N", "many")], &["check", "1", "2"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn matrix_formats() {
    let out = nullpart(&["matrix", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("{1}"));
    assert!(text.contains('5'));

    let out = nullpart(&["matrix", "1", "2", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "3,2,1,0\n2,3,0,1\n1,0,3,2\n0,1,2,3\n");

    let out = nullpart(&["matrix", "1", "3", "5", "2", "--verify-properties"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("pass  symmetric"));

    let out = nullpart(&[
        "matrix", "1", "3", "5", "2", "--format", "json", "--verify-properties",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0], "{1,2,3,4}");
    assert_eq!(v["cols"][0], "{1,2,3}");
    assert_eq!(v["properties"]["all_passed"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 4 * 8);

    // csv cannot carry a property report.
    let out = nullpart(&[
        "matrix", "1", "2", "--format", "csv", "--verify-properties",
    ]);
    assert_eq!(code(&out), 64);
}

#[test]
fn det_json_report() {
    let out = nullpart(&["det", "2", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["bareiss"], "5");
    assert_eq!(v["product"], "5");
    assert_eq!(v["match"], true);
    let factors: Vec<&str> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f.as_str().unwrap())
        .collect();
    assert_eq!(factors.len(), 2);
    assert!(factors.contains(&"5") && factors.contains(&"1"));
}

#[test]
fn det_shows_zero_factor_for_partitionable() {
    let out = nullpart(&["det", "1", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("bareiss = 0"));
    assert!(text.contains("product = 0"));
    assert!(text.contains("MATCH"));
    assert!(text.contains("factors: 2, 0"));
}

#[test]
fn certificate_of_partitionable_weights_reports_witness_without_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = nullpart(&["certificate", "1", "1", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("{2} | {1}"));
    assert!(!path.exists(), "no certificate file may appear");
}

#[test]
fn certificate_to_stdout_and_output_redirection() {
    let out = nullpart(&["certificate", "5"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["beta_linear"][0]["coeff"], "1/5");
    assert_eq!(v["beta_squares"][0][0]["coeff"], "-1");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = nullpart(&["check", "1", "1", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(fs::read_to_string(&path)
        .unwrap()
        .starts_with("partitionable"));
}

#[test]
fn verify_rejects_tampered_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = nullpart(&["certificate", "1", "3", "5", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let pristine = fs::read_to_string(&path).unwrap();
    assert_eq!(code(&nullpart(&["verify", path.to_str().unwrap()])), 0);

    // A single edited coefficient fails with a residual.
    fs::write(&path, pristine.replace("34/693", "35/693")).unwrap();
    let out = nullpart(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("FAIL"));
    assert!(stdout(&out).contains("residual"));

    // Edited weights break the certificate/system fit.
    fs::write(
        &path,
        pristine.replace("\"weights\": [\n    \"1\",", "\"weights\": [\n    \"2\","),
    )
    .unwrap();
    let out = nullpart(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);

    // Restored file passes again, also in JSON.
    fs::write(&path, &pristine).unwrap();
    let out = nullpart(&["verify", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);

    // Malformed JSON is a usage-class failure.
    fs::write(&path, "{ not json").unwrap();
    assert_eq!(code(&nullpart(&["verify", path.to_str().unwrap()])), 64);
    // Structurally wrong content too.
    fs::write(&path, pristine.replace("\"n\": 4", "\"n\": 3")).unwrap();
    assert_eq!(code(&nullpart(&["verify", path.to_str().unwrap()])), 64);
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&nullpart(&["--help"])), 0);
    assert_eq!(code(&nullpart(&["certificate", "--help"])), 0);
}
