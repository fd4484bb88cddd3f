//! End-to-end tests that spawn the `bellsum` binary and check the documented
//! surface: output text, JSON schemas, and the exit-code contract
//! (0 success, 1 usage or parse error, 2 not-summable verdict).

use std::process::{Command, Output};

use serde_json::Value;

fn bellsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

fn json(output: &Output) -> Value {
    serde_json::from_str(&stdout(output)).expect("stdout parses as JSON")
}

// ========================================
// sum
// ========================================

#[test]
fn sum_reports_certificate_and_value() {
    let out = bellsum(&["--format", "json", "sum", "(k-1)/fact(k)", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summable"], Value::Bool(true));
    assert_eq!(v["antidifference"], "-k/fact(k)");
    assert_eq!(v["sum"]["upper"], 5);
    assert_eq!(v["sum"]["value"], "-1/120");
    assert_eq!(v["normal_form"]["z"], "1");
    assert_eq!(v["certificate"]["x"].as_array().unwrap().len(), 1);
}

#[test]
fn sum_text_mode_prints_key_value_lines() {
    let out = bellsum(&["sum", "(k-1)/fact(k)", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("summable: yes"));
    assert!(text.contains("multiplier: -k/(k - 1)"));
    assert!(text.contains("sum 0..=5: -1/120"));
}

#[test]
fn not_summable_is_exit_code_two() {
    let out = bellsum(&["sum", "1/fact(k)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("summable: no"));
}

#[test]
fn not_summable_json_has_null_certificate() {
    let out = bellsum(&["--format", "json", "sum", "1/fact(k)", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["summable"], Value::Bool(false));
    assert_eq!(v["certificate"], Value::Null);
    assert_eq!(v["antidifference"], Value::Null);
    assert_eq!(v["sum"], Value::Null);
}

#[test]
fn zero_term_sums_to_zero() {
    let out = bellsum(&["--format", "json", "sum", "0", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summable"], Value::Bool(true));
    assert_eq!(v["sum"]["value"], "0");
}

#[test]
fn parse_error_exits_one_with_position() {
    let out = bellsum(&["sum", "(k-1)/fakt(k)"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("cannot parse term"), "stderr was: {err}");
    assert!(err.contains("byte 6"), "stderr was: {err}");
}

#[test]
fn alternating_sum_matches_library_value() {
    let term = "(k^2-11)*fact(k)/pow(-2,k)";
    let expected =
        bellsum_core::gosper::definite_sum(&bellsum_core::term::parse_term(term).unwrap(), 20)
            .unwrap();
    let out = bellsum(&["--format", "json", "sum", term, "--n", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["sum"]["value"], expected.to_string());
}

// ========================================
// corrections
// ========================================

#[test]
fn corrections_f_doubled_base() {
    let out = bellsum(&[
        "--format", "json", "corrections", "--family", "f", "--a", "1", "--z", "2", "--dmax", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["family"], "f");
    assert_eq!(v["values"], serde_json::json!(["1", "2", "6", "22", "94"]));
}

#[test]
fn corrections_bell_text() {
    let out = bellsum(&["corrections", "--family", "bell", "--dmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("d = 4: 15"));
}

#[test]
fn corrections_negative_z_value() {
    let out = bellsum(&[
        "--format", "json", "corrections", "--family", "g", "--a", "1", "--z", "-1", "--dmax", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["values"], serde_json::json!(["1", "-2", "5", "-15"]));
}

#[test]
fn corrections_bell_rejects_parameters() {
    let out = bellsum(&["corrections", "--family", "bell", "--a", "1", "--dmax", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn corrections_f_requires_parameters() {
    let out = bellsum(&["corrections", "--family", "f", "--dmax", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("require --a"));
}

#[test]
fn corrections_rejects_nonpositive_integer_a() {
    let out = bellsum(&["corrections", "--family", "g", "--a", "-2", "--z", "1", "--dmax", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("nonpositive integer"));
}

// ========================================
// tables
// ========================================

#[test]
fn tables_b_rows_fixture() {
    let out = bellsum(&["--format", "json", "tables", "--which", "B", "--dmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["rows"],
        serde_json::json!([
            ["1"],
            ["1", "1"],
            ["3", "1", "1"],
            ["9", "4", "1", "1"],
            ["31", "14", "5", "1", "1"],
        ])
    );
}

#[test]
fn tables_gould_text_list() {
    let out = bellsum(&["tables", "--which", "gould", "--dmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1, 1, 3, 9, 31");
}

#[test]
fn tables_a_single_row() {
    let out = bellsum(&["tables", "--which", "A", "--dmax", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn tables_which_is_case_insensitive() {
    let upper = bellsum(&["tables", "--which", "B", "--dmax", "3"]);
    let lower = bellsum(&["tables", "--which", "b", "--dmax", "3"]);
    assert_eq!(stdout(&upper), stdout(&lower));
}

// ========================================
// verify-paper
// ========================================

#[test]
fn verify_paper_all_pass() {
    let out = bellsum(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"), "output was:\n{text}");
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_paper_json_catalog() {
    let out = bellsum(&["--format", "json", "verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let entries = json(&out);
    let entries = entries.as_array().expect("array of results");
    assert!(entries.len() >= 20, "catalog has {} entries", entries.len());
    for entry in entries {
        assert_eq!(entry["status"], "pass", "failing entry: {entry}");
        assert!(entry["id"].is_string());
        assert!(entry["lhs"].is_string());
        assert!(entry["rhs"].is_string());
    }
}

// ========================================
// global behavior
// ========================================

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(bellsum(&["--help"]).status.code(), Some(0));
    assert_eq!(bellsum(&["--version"]).status.code(), Some(0));
    assert_eq!(bellsum(&["sum", "--help"]).status.code(), Some(0));
}

#[test]
fn unknown_subcommand_exits_one() {
    assert_eq!(bellsum(&["frobnicate"]).status.code(), Some(1));
}
