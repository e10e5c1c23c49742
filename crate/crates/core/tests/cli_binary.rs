use std::process::Command;

use alextwist::cli::poly_from_json;
use alextwist::exactring::{LaurentPoly, Variable};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_alextwist")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn trefoil_json_round_trips() {
    let (code, out, _) = run(&["alex", "--n", "2", "--braid", "1 1 1", "--var", "q"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let p = poly_from_json(&doc["poly"], Variable::Q).unwrap();
    assert_eq!(p, LaurentPoly::from_terms([(-2, 1), (0, -1), (2, 1)]));
}

#[test]
fn text_output_in_t() {
    let (code, out, _) = run(&["alex", "--n", "2", "--braid", "1 1 1", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("t^-1 - 1 + t"), "{out}");
}

#[test]
fn formula_range_agrees_with_direct() {
    let (code, out, _) = run(&["formula", "--n", "3", "--braid", "1 -2 1", "--m-range", "0..4"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["matches_direct"] == Value::Bool(true)));
}

#[test]
fn coefficients_below_n_are_indicators() {
    let (code, out, _) = run(&["coeffs", "--n", "3", "--m", "2", "--var", "q"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let got: Vec<LaurentPoly> = doc["coeffs"].as_array().unwrap().iter().map(|c| poly_from_json(c, Variable::Q).unwrap()).collect();
    assert_eq!(got, vec![LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one()]);
}

#[test]
fn stabilize_reports_shift() {
    let (code, out, _) = run(&["stabilize", "--n", "3", "--braid", "2 1 2 1", "--precision", "12"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["r"], Value::from(2));
}

#[test]
fn verify_passes() {
    let (code, out, _) = run(&["verify", "--depth", "3"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn input_errors_exit_one() {
    let (code, _, err) = run(&["alex", "--n", "2", "--braid", "1 5"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
    assert_eq!(run(&["alex", "--n", "3", "--braid", "1 x"]).0, 1);
    assert_eq!(run(&["coeffs", "--n", "0", "--m", "1"]).0, 1);
    assert_eq!(run(&["nonsense"]).0, 1);
}
