//! End-to-end tests of the `qcubic` binary: subcommand behavior, exit codes
//! and the structured report schema.

use std::process::{Command, Output};

fn qcubic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcubic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

#[test]
fn verify_single_identity_exits_zero() {
    let output = qcubic(&["verify", "chan-3", "--terms", "40"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("chan-3"));
    assert!(text.contains("VERIFIED"));
    assert!(text.contains("1 of 1 case(s) verified"));
}

#[test]
fn verify_unknown_identity_exits_two() {
    let output = qcubic(&["verify", "no-such-id"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("unknown identity"));
}

#[test]
fn verify_without_ids_or_all_exits_two() {
    let output = qcubic(&["verify"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_all_json_matches_the_report_schema() {
    let output = qcubic(&["verify", "--all", "--terms", "20", "--json"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");
    let reports = reports.as_array().expect("an array of report objects");
    assert!(reports.len() >= 16, "{} reports", reports.len());
    for report in reports {
        assert!(report["id"].is_string());
        assert!(report["terms_checked"].is_u64());
        assert_eq!(report["status"], "verified");
        assert!(report["first_mismatch"].is_null());
        assert!(report["elapsed_ms"].is_number());
        assert!(report["notes"].is_string() || report["notes"].is_null());
    }
    // the symbolic case carries the transcription diff in its notes
    let symbolic = reports.iter().find(|r| r["id"] == "lemma-4.1").unwrap();
    assert!(symbolic["notes"].as_str().unwrap().contains("X^3"));
}

#[test]
fn coeff_prints_anchor_values() {
    let output = qcubic(&["coeff", "a", "8"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output).trim(), "54");

    let output = qcubic(&["coeff", "p", "24"]);
    assert_eq!(stdout(&output).trim(), "1575");

    let output = qcubic(&["coeff", "p", "24", "--modulus", "5"]);
    assert_eq!(stdout(&output).trim(), "0");
}

#[test]
fn series_prints_coefficients() {
    let output = qcubic(&["series", "q^2", "--terms", "5"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(
        lines,
        vec!["q^0\t0", "q^1\t0", "q^2\t1", "q^3\t0", "q^4\t0", "q^5\t0"]
    );
}

#[test]
fn series_json_keeps_big_integers_as_strings() {
    let output = qcubic(&[
        "series",
        "1 / (E(1,1) * E(2,2))",
        "--terms",
        "8",
        "--json",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");
    assert_eq!(value["terms"], 8);
    let coefficients = value["coefficients"].as_array().unwrap();
    assert_eq!(coefficients.len(), 9);
    assert_eq!(coefficients[8], "54");
}

#[test]
fn series_with_modulus_prints_residues() {
    let output = qcubic(&["series", "28 + 28 * q", "--terms", "1", "--modulus", "27"]);
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines, vec!["q^0\t1", "q^1\t1"]);
}

#[test]
fn series_parse_error_exits_two() {
    let output = qcubic(&["series", "E(1,1", "--terms", "5"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("offset 6"), "{}", stderr(&output));
}

#[test]
fn series_non_unit_division_exits_two() {
    let output = qcubic(&["series", "1 / q", "--terms", "5"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("not a unit"), "{}", stderr(&output));
}

#[test]
fn dissect_recovers_the_nine_dissection_values() {
    // a(9n+8) for n = 0, 1: 54 and 1242
    let output = qcubic(&["dissect", "1 / (E(1,1) * E(2,2))", "9", "8", "--terms", "1"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines, vec!["q^0\t54", "q^1\t1242"]);
}

#[test]
fn dissect_rejects_bad_residues() {
    let output = qcubic(&["dissect", "q", "3", "3", "--terms", "5"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn list_prints_the_registry() {
    let output = qcubic(&["list"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    for id in ["ramanujan-5", "zuckerman-25", "chan-3", "cubic-9", "lemma-4.2-E", "congruence-a27"] {
        assert!(text.contains(id), "missing {id}");
    }
}

#[test]
fn help_exits_zero() {
    let output = qcubic(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
}
