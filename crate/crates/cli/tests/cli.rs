use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn hga(args: &[&str]) -> (i32, Value, Output) {
    let out = Command::new(env!("CARGO_BIN_EXE_hga")).args(args).output().expect("binary runs");
    let report: Value = serde_json::from_slice(&out.stdout).expect("report is json");
    (out.status.code().expect("exit code"), report, out)
}

fn with_input(cmd: &[&str], file: &str) -> (i32, Value) {
    let path = fixture(file);
    let mut args = cmd.to_vec();
    args.extend(["--input", path.to_str().unwrap()]);
    let (code, report, _) = hga(&args);
    (code, report)
}

#[test]
fn verify_hga_on_dual_numbers_exits_zero() {
    let (code, r) = with_input(&["verify-hga"], "dual_numbers.json");
    assert_eq!(code, 0);
    assert_eq!(r["status"], "verified");
    assert_eq!(r["report_version"], 1);
    assert_eq!(r["bounds"]["K"], 3);
    assert_eq!(r["bounds"]["weight"], 5);
}

#[test]
fn first_hochschild_group_of_dual_numbers() {
    let (code, r) = with_input(&["hochschild", "--m", "1", "--n", "0"], "dual_numbers.json");
    assert_eq!(code, 0);
    assert_eq!(r["result"]["dimension"], 2);
}

#[test]
fn corrupted_star_reports_a_witness_triple() {
    let (code, r) = with_input(&["check-star"], "dual_numbers_star_corrupted.json");
    assert_eq!(code, 1);
    assert_eq!(r["status"], "violation");
    assert_eq!(r["result"]["failure"]["order"], 2);
    assert_eq!(r["result"]["failure"]["witness"].as_array().unwrap().len(), 3);
    let (code, _) = with_input(&["check-star"], "dual_numbers_star.json");
    assert_eq!(code, 0);
}

#[test]
fn star_converts_to_a_formal_twist() {
    let (code, r) = with_input(&["star-to-twist"], "dual_numbers_star.json");
    assert_eq!(code, 0);
    assert_eq!(r["result"]["twist"]["carrier"], "formal");
    assert_eq!(r["result"]["twisting"], true);
}

#[test]
fn validation_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"algebra":{"basis":[{"name":"1","degree":0},{"name":"x","degree":1}],"unit":"1","mult":[["x","x",["x"]]]}}"#,
    )
    .unwrap();
    let (code, r, out) = hga(&["validate", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(r["status"], "input-error");
    assert_eq!(r["result"]["error"]["field"], "algebra.mult[0]");
    assert!(String::from_utf8_lossy(&out.stderr).contains("algebra.mult[0]"));

    std::fs::write(&bad, r#"{"algebra":{"basis":[{"name":"1","degree":0}]}}"#).unwrap();
    let (code, r, _) = hga(&["validate", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(r["result"]["error"]["field"], "algebra.unit");
}

#[test]
fn missing_input_is_an_input_error() {
    let (code, r, _) = hga(&["formality"]);
    assert_eq!(code, 2);
    assert_eq!(r["result"]["error"]["field"], "--input");
}

#[test]
fn output_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture("exterior.json");
    let mut texts = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("r{k}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_hga"))
            .args(["formality", "--input", input.to_str().unwrap(), "--output", out.to_str().unwrap()])
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
        texts.push(std::fs::read_to_string(&out).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    let r: Value = serde_json::from_str(&texts[0]).unwrap();
    assert_eq!(r["result"]["certified"], true);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn ainf_commands_on_the_exterior_algebra() {
    let (code, r) = with_input(&["check-ainf"], "exterior_ainf.json");
    assert_eq!(code, 0);
    assert_eq!(r["result"]["minimal"], true);
    let (code, r) = with_input(&["ainf-bar"], "exterior_ainf.json");
    assert_eq!(code, 0);
    assert_eq!(r["result"]["dd_failure"], Value::Null);
    let (code, r) = with_input(&["stasheff-to-twist"], "exterior_ainf.json");
    assert_eq!(code, 0);
    assert_eq!(r["result"]["twist"]["carrier"], "stasheff");
}

#[test]
fn quantize_verdicts_map_to_exit_codes() {
    let (code, r) =
        with_input(&["quantize", "--carrier", "formal", "--class", "10", "--trunc-T", "5"], "dual_numbers.json");
    assert_eq!(code, 0);
    assert_eq!(r["result"]["verdict"], "quantized");
    let (code, r) = with_input(&["trivialize", "--trunc-T", "5"], "dual_numbers_star.json");
    assert_eq!(code, 2);
    assert_eq!(r["result"]["error"]["field"], "twist");
    let (code, r) = with_input(&["quantize", "--carrier", "formal", "--class", "1"], "dual_numbers.json");
    assert_eq!(code, 2);
    assert_eq!(r["status"], "input-error");
}

#[test]
fn gerstenhaber_report_on_dual_numbers() {
    let (code, r) = with_input(&["gerstenhaber-report", "--order-N", "3"], "dual_numbers.json");
    assert_eq!(code, 0);
    assert_eq!(r["result"]["hh2"], 2);
    assert_eq!(r["result"]["classes"].as_array().unwrap().len(), 3);
}
