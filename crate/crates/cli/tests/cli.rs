//! End-to-end checks of the command-line interface: report contents, output
//! formats, determinism and exit codes.

use std::process::{Command, Output};

fn lieboson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieboson"))
        .args(args)
        .env_remove("LIEBOSON_FORMAT")
        .output()
        .expect("binary runs")
}

fn lieboson_with_env(args: &[&str], format: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieboson"))
        .args(args)
        .env("LIEBOSON_FORMAT", format)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("json stdout")
}

#[test]
fn build_reports_the_radical_expression() {
    let out = lieboson(&["build", "u2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("g1+g4"));
    assert!(text.contains("dimension 4"));
}

#[test]
fn build_json_lists_all_generators() {
    let out = lieboson(&["build", "u4", "--format", "json"]);
    assert!(out.status.success());
    let value = json(&out);
    assert_eq!(value["model"], "u4");
    assert_eq!(value["dimension"], 16);
    assert_eq!(value["semisimple_dimension"], 15);
    assert_eq!(value["generators"].as_array().unwrap().len(), 16);
    assert!(value["lattice"]["nodes"].as_array().unwrap().len() >= 9);
}

#[test]
fn unknown_model_is_a_usage_error() {
    let out = lieboson(&["build", "u9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_counts_match_the_catalog() {
    for (model, expected) in [("u2", 1), ("u2u2", 1), ("u3", 2), ("u4", 4)] {
        let out = lieboson(&["classify", model, "--format", "json"]);
        assert!(out.status.success(), "{model}");
        let value = json(&out);
        assert_eq!(value["classes"].as_array().unwrap().len(), expected, "{model}");
    }
}

#[test]
fn classify_text_shows_diagrams_and_triples() {
    let out = lieboson(&["classify", "u4"]);
    let text = stdout(&out);
    for diagram in ["[2 0 2]", "[1 0 1]", "[0 2 0]", "[2 2 2]"] {
        assert!(text.contains(diagram), "missing {diagram}");
    }
    assert!(text.contains("J+ = "));
}

#[test]
fn chains_lists_every_reduction_path() {
    let out = lieboson(&["chains", "u3", "--format", "json"]);
    assert!(out.status.success());
    let value = json(&out);
    assert_eq!(value["count"], 6);
    assert_eq!(value["chains"].as_array().unwrap().len(), 6);
    for (model, expected) in [("u2", 2), ("u2u2", 5), ("u4", 7)] {
        let value = json(&lieboson(&["chains", model, "--format", "json"]));
        assert_eq!(value["count"], expected, "{model}");
    }
}

#[test]
fn tensor_on_a_verified_listing_exits_cleanly() {
    let out = lieboson(&["tensor", "u4", "--jset", "L", "--format", "json"]);
    assert!(out.status.success());
    let value = json(&out);
    assert_eq!(value["reference"]["flagged"], false);
    assert_eq!(value["signature"].as_array().unwrap().len(), 5);
}

#[test]
fn tensor_on_a_flagged_listing_exits_three_with_replacement() {
    let out = lieboson(&["tensor", "u4", "--jset", "Y", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let value = json(&out);
    assert_eq!(value["reference"]["flagged"], true);
    assert!(!value["reference"]["replacement"].as_array().unwrap().is_empty());
    let ranks: Vec<&str> = value["multiplets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["rank"].as_str().unwrap())
        .collect();
    assert_eq!(ranks.iter().filter(|r| **r == "1").count(), 4);
    assert_eq!(ranks.iter().filter(|r| **r == "0").count(), 3);
}

#[test]
fn tensor_without_a_listing_reports_null_reference() {
    let out = lieboson(&["tensor", "u2", "--jset", "J", "--format", "json"]);
    assert!(out.status.success());
    assert!(json(&out)["reference"].is_null());
}

#[test]
fn tensor_flags_spinor_multiplets() {
    let out = lieboson(&["tensor", "u3", "--jset", "W", "--format", "json"]);
    assert!(out.status.code() == Some(3), "swapped doublet row flags the listing");
    let value = json(&out);
    let spinors = value["multiplets"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|m| m["spinor"] == true)
        .count();
    assert_eq!(spinors, 2);
}

#[test]
fn unknown_class_is_a_usage_error() {
    let out = lieboson(&["tensor", "u4", "--jset", "Q"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectrum_reproduces_the_pure_so3_example() {
    let out = lieboson(&["spectrum", "--delta", "1", "--N", "1", "--format", "json"]);
    assert!(out.status.success());
    let value = json(&out);
    let energies: Vec<&str> = value["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["energy"].as_str().unwrap())
        .collect();
    assert_eq!(energies, vec!["0", "0", "0", "2"]);
    assert_eq!(value["label_count"], 4);
    assert_eq!(value["multiplicity_weighted_count"], 6);
}

#[test]
fn spectrum_accepts_fractional_coefficients() {
    let out = lieboson(&["spectrum", "--alpha", "1/2", "--N", "2", "--format", "json"]);
    assert!(out.status.success());
    let value = json(&out);
    assert_eq!(value["levels"][0]["energy"], "6");
    let out = lieboson(&["spectrum", "--delta", "-1/3", "--N", "1", "--format", "json"]);
    assert!(out.status.success());
    let value = json(&out);
    assert_eq!(value["levels"][3]["energy"], "-2/3");
}

#[test]
fn negative_sector_is_a_usage_error() {
    let out = lieboson(&["spectrum", "--N", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fock_shows_the_spinor_doublet() {
    let out = lieboson(&["fock", "u4", "--op", "W2", "--N", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0.750000  1/2"));
    assert!(text.contains("dimension 4"));
}

#[test]
fn fock_accepts_number_and_class_casimir_names() {
    let out = lieboson(&["fock", "u2", "--op", "J2", "--N", "1", "--format", "json"]);
    assert!(out.status.success());
    let out = lieboson(&["fock", "u3", "--op", "L2", "--N", "2", "--format", "json"]);
    let value = json(&out);
    let eigenvalues: Vec<f64> = value["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_f64().unwrap())
        .collect();
    assert_eq!(eigenvalues.len(), 6);
    assert!((eigenvalues[0] - 0.0).abs() < 1e-8);
    assert!((eigenvalues[5] - 6.0).abs() < 1e-8);
}

#[test]
fn unknown_operator_is_a_usage_error() {
    let out = lieboson(&["fock", "u4", "--op", "X2", "--N", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dump_matrix_appends_the_export_block() {
    let out = lieboson(&["fock", "u4", "--op", "N", "--N", "1", "--dump-matrix"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("matrix:\n4 4\n"));
    let value = json(&lieboson(&[
        "fock", "u4", "--op", "N", "--N", "1", "--dump-matrix", "--format", "json",
    ]));
    assert!(value["matrix"].as_str().unwrap().starts_with("4 4\n"));
}

#[test]
fn json_reports_round_trip_and_repeat_identically() {
    for args in [
        vec!["build", "u3"],
        vec!["classify", "u4"],
        vec!["tensor", "u4", "--jset", "W"],
        vec!["chains", "u2u2"],
        vec!["spectrum", "--beta", "1", "--N", "2"],
        vec!["fock", "u4", "--op", "W2", "--N", "2"],
    ] {
        let mut with_format = args.clone();
        with_format.extend(["--format", "json"]);
        let first = lieboson(&with_format);
        let second = lieboson(&with_format);
        assert_eq!(first.stdout, second.stdout, "{args:?} not deterministic");
        let value = json(&first);
        let reparsed: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(value, reparsed, "{args:?} does not round-trip");
    }
}

#[test]
fn format_env_variable_sets_the_default() {
    let out = lieboson_with_env(&["build", "u2"], "json");
    assert!(out.status.success());
    assert_eq!(json(&out)["model"], "u2");
    let out = lieboson_with_env(&["build", "u2", "--format", "text"], "json");
    assert!(stdout(&out).starts_with("model u2"));
}
