//! End-to-end tests of the command-line interface: exit codes, report
//! files, expression evaluation, and the decomposition dump format.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_yangian"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn CLI")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

// -- verify ----------------------------------------------------------------

#[test]
fn verify_full_sweep_on_four_blocks_passes() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--p", "2",
        "--size", "2,2",
        "--sigma", "0101",
        "--mu", "1,1,1,1",
        "--series-order", "3",
        "--gen-order", "2",
        "--families", "all",
        "--report", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    let text = std::fs::read_to_string(&report).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["summary"]["passed"], serde_json::Value::Bool(true));
    assert_eq!(json["config"]["p"], 2);
    assert_eq!(json["config"]["sigma"], "0101");
    assert!(json["config"]["readings"].as_array().unwrap().len() >= 8);
    assert!(json["families"].as_array().unwrap().len() > 50);
}

#[test]
fn nonprime_characteristic_is_a_usage_error() {
    let out = run(&[
        "verify",
        "--p", "4",
        "--size", "2,2",
        "--sigma", "0101",
        "--mu", "1,1,1,1",
    ]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));
}

#[test]
fn composition_sum_mismatch_is_a_usage_error() {
    let out = run(&[
        "verify",
        "--p", "3",
        "--mu", "1,1",
        "--sigma", "010",
        "--size", "2,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("sums to 2"), "stderr: {}", stderr(&out));
}

#[test]
fn missing_required_flags_are_a_usage_error() {
    let out = run(&["verify", "--mu", "1,1", "--sigma", "010", "--size", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_family_is_a_usage_error() {
    let out = run(&[
        "verify",
        "--p", "3",
        "--size", "1,1",
        "--sigma", "01",
        "--mu", "1,1",
        "--families", "no-such-family",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_goes_to_stdout_without_a_path() {
    let out = run(&[
        "verify",
        "--p", "3",
        "--size", "1,1",
        "--sigma", "01",
        "--mu", "1,1",
        "--families", "RTT,commurelation",
        "--series-order", "2",
        "--gen-order", "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ids: Vec<&str> = json["families"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["RTT", "commurelation"]);
}

#[test]
fn fault_injection_records_failures_and_exits_one() {
    for fault in ["flip-sign", "drop-term"] {
        let dir = tempfile::tempdir().unwrap();
        let report = dir.path().join("report.json");
        let out = bin()
            .env("YANGIAN_FAULT", fault)
            .args([
                "verify",
                "--p", "3",
                "--size", "1,1",
                "--sigma", "01",
                "--mu", "1,1",
                "--series-order", "2",
                "--gen-order", "2",
                "--families", "RTT",
                "--report", report.to_str().unwrap(),
            ])
            .output()
            .expect("spawn CLI");
        assert_eq!(out.status.code(), Some(1), "fault {fault}");
        let json: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
        let failures = json["summary"]["total_failures"].as_u64().unwrap();
        assert!(failures >= 1, "fault {fault} produced no failures");
    }
}

// -- eval ------------------------------------------------------------------

fn eval_11(expr: &str) -> Output {
    run(&["eval", "--p", "3", "--size", "1,1", "--sigma", "01", "--expr", expr])
}

#[test]
fn eval_bracket_matches_the_documented_normal_form() {
    let out = eval_11("[t(1,2,1), t(2,1,1)]");
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "1*t(2,2,1) + 2*t(1,1,1)");
}

#[test]
fn eval_level_zero_generator_is_a_kronecker_delta() {
    let out = eval_11("t(1,1,0)");
    assert_eq!(stdout(&out).trim(), "1");
    let out = eval_11("t(1,2,0)");
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn eval_unbalanced_bracket_is_a_parse_error() {
    let out = eval_11("[t(1,1,1)");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error"), "stderr: {}", stderr(&out));
}

#[test]
fn eval_reduces_integers_mod_p() {
    let out = eval_11("7*t(1,1,1)");
    assert_eq!(stdout(&out).trim(), "1*t(1,1,1)");
    let out = eval_11("3");
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn eval_inverse_generator_coefficients() {
    // T'(u) = T(u)^{-1}, so the level-1 coefficients are negatives.
    let out = eval_11("tp(1,1,1) + t(1,1,1)");
    assert_eq!(stdout(&out).trim(), "0");
    // Level 2: t'^{(2)} = -t^{(2)} + (t^{(1)} T^{(1)})_{11} entry-wise.
    let out = eval_11("tp(1,1,2) + t(1,1,2) - t(1,1,1)*t(1,1,1) - t(1,2,1)*t(2,1,1)");
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn eval_block_atoms_resolve_against_the_decomposition() {
    let out = run(&[
        "eval",
        "--p", "3",
        "--size", "2,1",
        "--sigma", "010",
        "--mu", "2,1",
        "--expr", "E(1;2,1;1)",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "1*t(2,3,1)");
}

#[test]
fn eval_block_atoms_without_mu_are_rejected() {
    let out = run(&[
        "eval",
        "--p", "3",
        "--size", "2,1",
        "--sigma", "010",
        "--expr", "D(1;1,1;1)",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--mu"));
}

#[test]
fn eval_out_of_range_atom_is_rejected() {
    let out = eval_11("t(3,1,1)");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "eval",
        "--p", "3",
        "--size", "2,1",
        "--sigma", "010",
        "--mu", "2,1",
        "--expr", "Eab(2,1;1,1;1)",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_respects_an_explicit_series_order_cap() {
    let out = run(&[
        "eval",
        "--p", "3",
        "--size", "1,1",
        "--sigma", "01",
        "--series-order", "1",
        "--expr", "tp(1,1,2)",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

/// Printing an element and re-parsing the printed text must reproduce it.
#[test]
fn dsl_round_trips_canonical_output() {
    for expr in [
        "[t(1,2,1), t(2,1,1)]",
        "t(1,2,1)*t(2,1,2)*t(1,1,1)",
        "(1 + t(1,1,1)) * (2 + t(2,2,1))",
        "[t(1,2,1), t(2,1,2)] - t(1,1,3)",
    ] {
        let first = eval_11(expr);
        assert_eq!(first.status.code(), Some(0), "expr {expr}");
        let printed = stdout(&first).trim().to_string();
        let second = eval_11(&printed);
        assert_eq!(second.status.code(), Some(0), "reparse of {printed}");
        assert_eq!(stdout(&second).trim(), printed, "round trip of {expr}");
    }
}

// -- gauss -----------------------------------------------------------------

#[test]
fn gauss_single_block_dump_lists_plain_generators() {
    let out = run(&[
        "gauss",
        "--p", "3",
        "--size", "2,1",
        "--sigma", "010",
        "--mu", "3",
        "--series-order", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in text.lines() {
        assert!(line.starts_with("block 1 1 | "), "unexpected line {line}");
    }
    assert!(text.contains("block 1 1 | 2 3 1 | 1*t(2,3,1)"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn gauss_two_block_dump_contains_the_expected_ladder_entry() {
    let out = run(&[
        "gauss",
        "--p", "3",
        "--size", "1,1",
        "--sigma", "01",
        "--mu", "1,1",
        "--series-order", "1",
    ]);
    let text = stdout(&out);
    assert!(
        text.contains("block 1 2 | 1 1 1 | 1*t(1,2,1)"),
        "dump was: {text}"
    );
}

#[test]
fn gauss_dump_at_lower_order_is_a_prefix_of_higher_order() {
    let args = |order: &'static str| {
        [
            "gauss",
            "--p", "5",
            "--size", "2,1",
            "--sigma", "001",
            "--mu", "1,2",
            "--series-order", order,
        ]
    };
    let small = stdout(&run(&args("1")));
    let large = stdout(&run(&args("2")));
    assert!(large.starts_with(&small), "prefix property violated");
    assert!(large.len() > small.len());
}
