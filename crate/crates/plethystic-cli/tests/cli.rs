use std::io::Write;
use std::process::{Command, Output};

use plethystic::verifier::VerificationReport;
use plethystic::vertex::ChargedState;
use plethystic::{Partition, SymFunc};
use serde_json::Value;

fn plethystic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethystic"))
        .args(args)
        .env_remove("PLETHYSTIC_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn s(parts: &[usize]) -> SymFunc {
    SymFunc::schur(Partition::new(parts.to_vec()).unwrap())
}

#[test]
fn pi_schur_json_output() {
    let out = plethystic(&["pi-schur", "--pi", "[2]", "--lambda", "[2]", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: SymFunc = serde_json::from_str(&stdout(&out)).unwrap();
    // s_(2) skewed by L_(2): the degree-two term of L_(2) is -s_(2).
    assert_eq!(value, s(&[2]) - s(&[]));
}

#[test]
fn pi_schur_of_empty_lambda_is_one() {
    let out = plethystic(&["pi-schur", "--pi", "[3]", "--lambda", "[]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "s[]");
}

#[test]
fn routes_cross_check() {
    let out = plethystic(&[
        "dual-pi-schur", "--pi", "[1,1]", "--lambda", "[2,1]", "--route", "vertex", "--route", "perp", "--route",
        "cauchy", "--check-oracle", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["agree"], Value::Bool(true));
    let routes: Vec<&String> = v["routes"].as_object().unwrap().keys().collect();
    assert_eq!(routes, ["cauchy", "oracle", "perp", "vertex"]);
}

#[test]
fn ring_operations_with_oracle() {
    let out = plethystic(&["product", "--mu", "[1]", "--nu", "[1]", "--check-oracle"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "s[2] + s[1,1]");

    let out = plethystic(&["skew", "--lambda", "[2,1]", "--mu", "[1]", "--check-oracle"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "s[2] + s[1,1]");

    let out = plethystic(&["plethysm", "--outer", "[2]", "--inner", "[1,1]", "--check-oracle", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: SymFunc = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value, s(&[2, 2]) + s(&[1, 1, 1, 1]));
}

#[test]
fn branch_and_series() {
    let out = plethystic(&["branch", "--pi", "[1]", "--lambda", "[1]"]);
    assert_eq!(stdout(&out).trim(), "s[1] + s[]");

    let out = plethystic(&["series", "--family", "M", "--shape", "[1]", "--max-r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\ts[]\n1\ts[1]\n2\ts[2]\n");

    let out = plethystic(&["series", "--family", "L", "--shape", "[2]", "--skew", "[1]", "--max-r", "1", "--format", "json"]);
    let rows: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2);
    assert_eq!(rows[1]["r"], 1);
}

#[test]
fn mode_round_trips_state() {
    let out = plethystic(&["mode", "--pi", "[]", "--kind", "X", "--m", "-1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let state: ChargedState = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(state, ChargedState::pure(1, s(&[1])));

    // X*_1 undoes it.
    let json = serde_json::to_string(&state).unwrap();
    let out = plethystic(&["mode", "--pi", "[]", "--kind", "Xstar", "--m", "1", "--state", &json, "--format", "json"]);
    let back: ChargedState = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(back, ChargedState::vacuum());
}

#[test]
fn verify_clifford_default_passes() {
    let out = plethystic(&["verify", "clifford", "--pi", "[3]", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let report: VerificationReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.passed());
    assert!(report.cases_run > 0);
    let again = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(again.trim(), stdout(&out).trim());
}

#[test]
fn perturbed_suite_exits_one_and_replays() {
    let out = plethystic(&["verify", "multivertex", "--perturb", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: VerificationReport = serde_json::from_str(&stdout(&out)).unwrap();
    let failure = &report.failures[0];
    let inputs = failure.inputs.to_string();
    let out = plethystic(&["verify", "multivertex", "--replay", &inputs, "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let replayed: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(replayed["lhs"], failure.lhs);
    assert_eq!(replayed["rhs"], failure.rhs);
}

#[test]
fn parse_errors_exit_two_naming_the_flag() {
    let out = plethystic(&["pi-schur", "--pi", "[1,2]", "--lambda", "[]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--pi"), "{}", stderr(&out));

    let out = plethystic(&["verify", "clifford", "--modes", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--modes"));

    let out = plethystic(&["verify", "zero-modes", "--lengths", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--lengths"));

    let out = plethystic(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = plethystic(&["plethysm", "--outer", "[4]", "--inner", "[4]", "--degree-budget", "8"]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("plethystic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("defaults.conf");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# narrow run\nformat = json\ncharge_range = 0,0\nmode_range = -1,1\njobs = 2").unwrap();
    drop(f);

    let out = Command::new(env!("CARGO_BIN_EXE_plethystic"))
        .args(["verify", "clifford", "--pi", "[2]"])
        .env("PLETHYSTIC_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: VerificationReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.config["charges"], serde_json::json!([0, 0]));
    assert_eq!(report.config["modes"], serde_json::json!([-1, 1]));

    std::fs::write(&path, "colour = blue\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_plethystic"))
        .args(["product", "--mu", "[1]", "--nu", "[1]"])
        .env("PLETHYSTIC_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("colour"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn no_timing_makes_output_repeatable() {
    let args = ["verify", "theorem2", "--pi", "[2]", "--degree", "4", "--format", "json", "--no-timing"];
    let a = plethystic(&args);
    let b = plethystic(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
