use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

use tower_cli::{run, JobSpec};

fn tower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tower")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("UTF-8 output")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON report")
}

#[test]
fn kronecker_prints_an_integer() {
    let o = tower(&["kronecker", "--lambda", "1", "--mu", "1", "--nu", "2", "--r", "3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    let o = tower(&["kronecker", "--lambda", "1", "--mu", "1", "--nu", "1", "--r", "2", "--format", "text"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn seminormal_transition_is_unitriangular() {
    let o = tower(&["seminormal", "--tower", "hecke", "--level", "3", "--cell", "2,1", "--emit", "transition"]);
    assert_eq!(o.status.code(), Some(0));
    let report = json(&o);
    let t = report["results"]["cells"][0]["transition"].as_array().unwrap();
    assert_eq!(t.len(), 2);
    for (i, row) in t.iter().enumerate() {
        let row = row.as_array().unwrap();
        assert_eq!(row[i], "1");
        for entry in &row[..i] {
            assert_eq!(entry, "0");
        }
    }
}

#[test]
fn check_axioms_passes_on_hecke() {
    let o = tower(&["check-axioms", "--tower", "hecke", "--max-level", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["results"]["passed"], true);
}

#[test]
fn report_schema_and_timings() {
    let o = tower(&["gram", "--tower", "hecke", "--level", "3", "--cell", "2,1"]);
    let report = json(&o);
    let mut keys: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["command", "level", "results", "seed", "timings", "tower", "version"]);
    assert!(stdout(&o).starts_with("{\n  \"tower\": \"hecke\",\n  \"level\": 3,\n  \"command\": \"gram\""));
    let timings = report["timings"].as_object().unwrap();
    assert!(timings.contains_key("build") && timings.contains_key("gram"));
}

#[test]
fn gram_csv_is_labelled_by_paths() {
    let o = tower(&["gram", "--tower", "hecke", "--level", "2", "--cell", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "path,∅→(1)→(2)\n∅→(1)→(2),1 + q\n");
    let o = tower(&["gram", "--tower", "hecke", "--level", "2", "--cell", "2", "--at", "1"]);
    assert_eq!(json(&o)["results"]["determinant"], "2");
}

#[test]
fn skew_table_as_csv() {
    let o = tower(&["skew", "--tower", "symmetric", "--nu", "2,1", "--lambda", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "family,lambda,mu,nu,value\na,\"(1)\",\"(2)\",\"(2,1)\",1\na,\"(1)\",\"(1,1)\",\"(2,1)\",1\n");
}

#[test]
fn oracle_queries() {
    let o = tower(&["oracle", "kronecker", "--alpha", "2,1", "--beta", "2,1", "--gamma", "2,1", "--format", "text"]);
    assert_eq!(stdout(&o), "1\n");
    let o = tower(&["oracle", "character", "--lambda", "2,1", "--rho", "3", "--format", "text"]);
    assert_eq!(stdout(&o), "-1\n");
    let o = tower(&["oracle", "lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--format", "text"]);
    assert_eq!(stdout(&o), "2\n");
    let o = tower(&["oracle", "kronecker", "--alpha", "2", "--beta", "1", "--gamma", "1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn multiplicity_tables_agree_with_the_oracle() {
    for family in ["a", "A"] {
        let o = tower(&["multiplicities", "--tower", "symmetric", "--level", "3", "--family", family]);
        assert_eq!(o.status.code(), Some(0), "{family}");
        assert!(json(&o)["results"]["oracle_disagreements"].as_array().unwrap().is_empty());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(tower(&["check-axioms", "--tower", "nope", "--max-level", "2"]).status.code(), Some(2));
    assert_eq!(tower(&["gram", "--tower", "hecke", "--level", "2", "--cell", "2,,1"]).status.code(), Some(2));
    assert_eq!(tower(&["gram", "--tower", "hecke", "--level", "2", "--cell", "3"]).status.code(), Some(2));
    assert_eq!(tower(&["check-axioms", "--tower", "hecke", "--max-level", "9"]).status.code(), Some(3));
    assert_eq!(tower(&["kronecker", "--lambda", "1", "--mu", "1", "--nu", "1", "--r", "7"]).status.code(), Some(3));
    assert_eq!(tower(&["murphy", "--tower", "symmetric", "--level", "3", "--format", "text"]).status.code(), Some(2));
}

#[test]
fn mathematical_failure_carries_a_witness() {
    let o = tower(&["seminormal", "--tower", "tl", "--parameter", "0", "--level", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let report = json(&o);
    assert_eq!(report["results"]["passed"], false);
    let witness = &report["results"]["witness"];
    assert!(witness["error"].as_str().unwrap().contains("central character"));
    let rerun: JobSpec = serde_json::from_value(witness["job"].clone()).unwrap();
    assert!(!run(&rerun).unwrap().passed);

    let o = tower(&["check-axioms", "--tower", "tl", "--parameter", "0", "--max-level", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn identical_jobs_give_identical_bytes() {
    let args = ["kronecker", "--r", "3", "--sample", "6", "--seed", "11", "--redact-timings"];
    let (a, b) = (tower(&args), tower(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = tower(&["kronecker", "--r", "3", "--sample", "6", "--seed", "12", "--redact-timings"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn config_file_matches_flags() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"command": "seminormal", "tower": "symmetric", "level": 3, "cell": "2,1", "emit": ["gammas", "kappa"], "redact_timings": true}}"#
    )
    .unwrap();
    let from_file = tower(&["run", "--config", file.path().to_str().unwrap()]);
    let from_flags = tower(&[
        "seminormal", "--tower", "symmetric", "--level", "3", "--cell", "2,1", "--emit", "gammas", "--emit", "kappa",
        "--redact-timings",
    ]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, from_flags.stdout);
}

#[test]
fn job_specs_reject_unknown_and_unused_fields() {
    assert!(JobSpec::from_json_str(r#"{"command": "gram", "tower": "hecke", "level": 2, "cell": "2"}"#).is_ok());
    assert!(JobSpec::from_json_str(r#"{"command": "gram", "tower": "hecke", "colour": 2}"#).is_err());
    assert!(JobSpec::from_json_str(r#"{"command": "axioms", "tower": "hecke", "level": 2, "cell": "2"}"#).is_err());
    assert!(JobSpec::from_json_str(r#"{"command": "seminormal", "emit": ["everything"]}"#).is_err());
    assert!(JobSpec::from_json_str(r#"{"command": "gram", "at": "1/0"}"#).is_err());
    assert!(JobSpec::from_json_str(r#"{"tower": "hecke"}"#).is_err());
    let job = JobSpec::from_json_str(r#"{"command": "oracle", "family": "kronecker", "alpha": "1", "beta": "1", "gamma": "1"}"#).unwrap();
    assert_eq!(job.lambda.as_deref(), Some("1"));
}
