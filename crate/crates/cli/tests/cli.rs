//! End-to-end checks of the command surface: exit codes, JSON shapes and
//! byte-identical reproduction of certificates.

use std::path::Path;
use std::process::{Command, Output};

fn antiramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn construct_named_graph_text_format() {
    let out = antiramsey(&["construct", "petersen"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("10 15\n"));
    assert_eq!(text.lines().count(), 16);
}

#[test]
fn construct_gadget_dot_output() {
    let out = antiramsey(&["construct", "gadget:4,2", "--dot"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("graph g {"));
}

#[test]
fn construct_rejects_unknown_names() {
    let out = antiramsey(&["construct", "zorp"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn forces_k24_exits_zero_and_reports() {
    let out = antiramsey(&["forces", "--host", "k24", "--pattern", "c_4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("forces"));
}

#[test]
fn forces_witness_prints_colouring() {
    let out = antiramsey(&["forces", "--host", "c_4", "--pattern", "c_4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("witness found"));
    assert!(text.lines().count() >= 5);
}

#[test]
fn forces_budget_exhaustion_exits_two() {
    let out = antiramsey(&[
        "forces",
        "--host",
        "k24",
        "--pattern",
        "c_4",
        "--budget-nodes",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn forces_json_certificates_reproduce_byte_identically() {
    let dir = std::env::temp_dir().join("antiramsey-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let first = dir.join("cert1.json");
    let second = dir.join("cert2.json");
    for path in [&first, &second] {
        let out = antiramsey(&[
            "forces",
            "--host",
            "nonmono",
            "--pattern",
            "c_4",
            "--mode",
            "palette=4",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b, "certificates must reproduce byte-identically");
}

#[test]
fn forces_writes_manifest() {
    let dir = std::env::temp_dir().join("antiramsey-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let manifest = dir.join("manifest.json");
    let out = antiramsey(&[
        "forces",
        "--host",
        "c_3",
        "--pattern",
        "c_3",
        "--manifest",
        manifest.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&manifest).unwrap()).unwrap();
    assert_eq!(parsed["outcome"], "Forces");
    assert!(parsed["command"].as_array().unwrap().len() >= 5);
}

#[test]
fn dk_reports_thresholds() {
    let out = antiramsey(&["dk", "--k", "3", "--dmax", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = antiramsey(&["dk", "--k", "4", "--dmax", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn embed_finds_a_rainbow_copy() {
    let dir = std::env::temp_dir().join("antiramsey-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let colouring = dir.join("triangle.col");
    std::fs::write(&colouring, "0 1 1\n0 2 2\n1 2 3\n").unwrap();
    let out = antiramsey(&[
        "embed",
        "--host",
        "c_3",
        "--pattern",
        "c_3",
        "--colouring",
        colouring.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["found"], true);
    assert!(parsed["embedding"]["map"].is_array());
}

#[test]
fn width_and_sdr_on_family_files() {
    let dir = std::env::temp_dir().join("antiramsey-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let family = dir.join("family.json");
    std::fs::write(
        &family,
        r#"{"universe": ["c1", "c2", "c3"], "sets": [["c1", "c2"], ["c2", "c3"]], "groups": [[0], [1]]}"#,
    )
    .unwrap();
    let out = antiramsey(&["width", "--family", family.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2/3");

    let out = antiramsey(&["sdr", "--family", family.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "none"); // the two sets share c2

    let disjoint = dir.join("disjoint.json");
    std::fs::write(
        &disjoint,
        r#"{"universe": ["c1", "c2"], "sets": [["c1"], ["c2"]], "groups": [[0], [1]]}"#,
    )
    .unwrap();
    let out = antiramsey(&["sdr", "--family", disjoint.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("c1"));
}

#[test]
fn width_rejects_malformed_family() {
    let dir = std::env::temp_dir().join("antiramsey-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let family = dir.join("bad.json");
    std::fs::write(&family, r#"{"universe": ["c1"], "sets": [["c9"]]}"#).unwrap();
    let out = antiramsey(&["width", "--family", family.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn avoid_c4_produces_verified_colouring() {
    let out = antiramsey(&["avoid-c4", "--host", "petersen", "--json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["proper"], true);
    assert_eq!(parsed["rainbow_c4_free"], true);
}

#[test]
fn avoid_c4_rejects_noncubic_hosts() {
    let out = antiramsey(&["avoid-c4", "--host", "c_5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn chromatic_index_of_the_nonmono_host() {
    let out = antiramsey(&["chromatic-index", "--host", "nonmono"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn bounds_of_the_four_cycle() {
    let out = antiramsey(&["bounds", "--pattern", "c_4", "--json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["lower"], 4);
    assert_eq!(parsed["upper"], 4);
}

#[test]
fn graph_files_round_trip_through_the_cli() {
    let dir = std::env::temp_dir().join("antiramsey-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("host.graph");
    let out = antiramsey(&["construct", "k4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(Path::new(&path).exists());
    let out = antiramsey(&["forces", "--host", path.to_str().unwrap(), "--pattern", "c_3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("forces"));
}

#[test]
fn construct_forest_host_from_file() {
    let dir = std::env::temp_dir().join("antiramsey-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let forest = dir.join("forest.graph");
    // a path on four vertices; its host is the five-cycle
    std::fs::write(&forest, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let spec = format!("host:{}", forest.display());
    let out = antiramsey(&["construct", &spec]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("5 5\n"));
}

#[test]
fn suite_fast_tier_passes() {
    let out = antiramsey(&["suite", "--tier", "fast", "--json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r["passed"] == true));
}

#[test]
fn malformed_graph_file_diagnoses_line() {
    let dir = std::env::temp_dir().join("antiramsey-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.graph");
    std::fs::write(&path, "3 2\n0 1\n0 x\n").unwrap();
    let out = antiramsey(&["forces", "--host", path.to_str().unwrap(), "--pattern", "c_3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}
