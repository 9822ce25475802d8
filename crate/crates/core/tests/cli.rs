use std::process::Command;

use su21::catalog::{export_json, from_json, load_catalog};

fn su21(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_su21")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_case_by_family_label_as_json() {
    let (code, out, _) = su21(&["verify", "--case", "u_1_2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    let results = v["results"].as_array().unwrap();
    assert!(!results.is_empty());
    assert!(results.iter().all(|r| r["case_id"] == "c07_01"));
    assert!(results.iter().any(|r| r["check_name"] == "d_real_point/main" && r["status"] == "pass"));
}

#[test]
fn verify_table_four() {
    let (code, out, _) = su21(&["verify", "--table", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let cases: std::collections::BTreeSet<&str> =
        v["results"].as_array().unwrap().iter().map(|r| r["case_id"].as_str().unwrap()).collect();
    assert_eq!(cases.into_iter().collect::<Vec<_>>(), vec!["c09_01", "c09_02"]);
    for label in ["u_3_4", "u_3_5", "u_3_6"] {
        assert!(out.contains(&format!("e_closure_realness/{label}")));
    }
}

#[test]
fn unknown_case_is_usage_error() {
    let (code, _, err) = su21(&["verify", "--case", "nonexistent"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonexistent"));
    assert_eq!(su21(&["verify", "--table", "9"]).0, 2);
    assert_eq!(su21(&["frobnicate"]).0, 2);
}

#[test]
fn samples_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let samples = dir.path().join("samples.json");
    std::fs::write(&samples, r#"{"u_1_7": ["2", "-1/3", "7/5"]}"#).unwrap();
    let out = dir.path().join("report.txt");
    let (code, stdout, _) = su21(&[
        "verify",
        "--case",
        "c07_04",
        "--samples",
        samples.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("d_real_point/unit_circle@7/5"));
    assert!(!text.contains("d_real_point/unit_circle@5/2"));

    std::fs::write(&samples, r#"{"u_1_7": ["0"]}"#).unwrap();
    assert_eq!(su21(&["verify", "--samples", samples.to_str().unwrap()]).0, 2);
}

#[test]
fn list_cases() {
    let (code, out, _) = su21(&["list-cases"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 38);
    let (code, out, _) = su21(&["list-cases", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 38);
}

#[test]
fn export_catalog_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    let (code, _, _) = su21(&["export-catalog", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, export_json(load_catalog()).unwrap());
    assert_eq!(&from_json(&text).unwrap(), load_catalog());
}
