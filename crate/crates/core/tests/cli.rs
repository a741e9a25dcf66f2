use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn efx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_efx")).args(args).output().expect("spawn efx")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_instance(name: &str, args: &[&str]) -> PathBuf {
    let out = efx(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let path = std::env::temp_dir().join(format!("efx-cli-{}-{name}.json", std::process::id()));
    std::fs::write(&path, &out.stdout).unwrap();
    path
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--n", "3", "-t", "6", "--seed", "9", "--d", "1/20"];
    assert_eq!(efx(&args).stdout, efx(&args).stdout);
}

#[test]
fn gen_then_run_main() {
    let path = temp_instance("main", &["gen", "-t", "7", "--identical", "--seed", "4", "--d", "1/50"]);
    let out = efx(&["run", "--instance", path.to_str().unwrap(), "--allocator", "main", "--a", "3/4", "--min-factor", "3/4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let tr = json(&out);
    assert_eq!(tr["steps"].as_array().unwrap().len(), 7);
}

#[test]
fn run_fails_when_min_factor_is_missed() {
    let path = temp_instance("ef1", &["gen", "-t", "3", "--identical", "--seed", "1"]);
    let out = efx(&["run", "--instance", path.to_str().unwrap(), "--allocator", "ef1-lowest", "--min-factor", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn perturb_rewrites_truths() {
    let path = temp_instance("perturb", &["gen", "-t", "5", "--identical", "--seed", "2"]);
    let out = efx(&["perturb", "--instance", path.to_str().unwrap(), "--d", "1/10", "--seed", "5"]);
    assert!(out.status.success());
    let file = json(&out);
    assert_ne!(file["predictions"], file["truths"]);
}

#[test]
fn oracle_on_identical_instance_is_exact() {
    let path = temp_instance("oracle", &["gen", "-t", "6", "--identical", "--seed", "8"]);
    let out = efx(&["oracle", "--instance", path.to_str().unwrap()]);
    assert_eq!(json(&out)["factor"], "1/1");
}

#[test]
fn oracle_on_prediction_only_construction() {
    let out = efx(&["oracle", "--construction", "prediction-only", "--a", "3/5", "--param", "D=1/10"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["factor"], "7/13");
    assert_eq!(v["unbeatable"], true);
}

#[test]
fn duel_reports_defeat() {
    let out = efx(&["duel", "--construction", "7", "--a", "1/2", "--n", "3", "--expect-defeat"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bounds_sweep_prints_csv() {
    let out = efx(&["bounds", "sweep", "--places", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,follower-sufficient,main-sufficient,id-2-lb"));
    assert_eq!(lines.next(), Some("0.6200,0.0782,0.0866,0.1170"));
}

#[test]
fn bounds_eval_matches_the_figure() {
    let out = efx(&["bounds", "eval", "--bound", "main-sufficient", "--a", "4/5"]);
    assert_eq!(json(&out)["d"], "52/1323");
}

#[test]
fn verify_exit_codes() {
    assert_eq!(efx(&["verify", "example-numbers", "figure-curves"]).status.code(), Some(0));
    assert_eq!(efx(&["verify", "follower-guarantee"]).status.code(), Some(1));
}

#[test]
fn bad_input_exits_two() {
    let out = efx(&["bounds", "eval", "--bound", "non-id-2-lb", "--a", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
}
