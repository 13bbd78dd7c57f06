use std::path::PathBuf;
use std::process::{Command, Output};

const PSI_1: &str = "S[1000,2000](supply >= demand)";

fn microgrid() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/microgrid.json")
}

fn spars(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spars"))
        .args(args)
        .env_remove("SPARS_EDGE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_at_one_location() {
    let m = microgrid();
    let o = spars(&["eval", "--model", m.to_str().unwrap(), "--formula", PSI_1, "--at", "4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "4: {(1000.00, 5175.97)}\n");
}

#[test]
fn check_lists_every_location() {
    let m = microgrid();
    let o = spars(&["check", "--model", m.to_str().unwrap(), "--formula", "everywhere[0,1000](supply >= demand)"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let truthy: Vec<&str> = out
        .lines()
        .filter_map(|l| l.strip_suffix(": true"))
        .collect();
    assert_eq!(truthy, ["2", "6", "9"]);
    assert_eq!(out.lines().count(), 10);
}

#[test]
fn unknown_location_exits_with_input_error() {
    let m = microgrid();
    let o = spars(&["eval", "--model", m.to_str().unwrap(), "--formula", PSI_1, "--at", "no_such_node"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.starts_with("error[UnknownLocation]: "), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn malformed_formula_exits_with_input_error() {
    let m = microgrid();
    let o = spars(&["eval", "--model", m.to_str().unwrap(), "--formula", "S[1000,2000](supply >="]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[ParseError]"));
}

#[test]
fn exhausted_budget_exits_with_evaluation_error() {
    let m = microgrid();
    let o = Command::new(env!("CARGO_BIN_EXE_spars"))
        .args(["eval", "--model", m.to_str().unwrap(), "--formula", PSI_1])
        .env("SPARS_EDGE_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[BudgetExceeded]"));
}

#[test]
fn missing_model_file() {
    let o = spars(&["check", "--model", "/no/such/file.json", "--formula", "x > 0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[Io]"));
}

#[test]
fn zero_weight_model_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, r#"{"locations":[{"id":"a"},{"id":"b"}],"edges":[{"a":"a","b":"b","w":0}]}"#).unwrap();
    let o = spars(&["check", "--model", path.to_str().unwrap(), "--formula", "true"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[NonPositiveWeight]"));
}

#[test]
fn formula_file_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let formula = dir.path().join("psi.txt");
    let out = dir.path().join("out.json");
    std::fs::write(&formula, PSI_1).unwrap();
    let m = microgrid();
    let o = spars(&[
        "eval",
        "--model",
        m.to_str().unwrap(),
        "--formula-file",
        formula.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["4"], serde_json::json!([[1000.0, 5175.969999999999]]));
    assert_eq!(doc.as_object().unwrap().len(), 10);
}

#[test]
fn oracle_accepts_both_logics() {
    let m = microgrid();
    let o = spars(&["oracle", "--model", m.to_str().unwrap(), "--formula", PSI_1, "--at", "5"]);
    assert_eq!(stdout(&o), "5: {(238.63, 5175.97)}\n");
    let o = spars(&["oracle", "--model", m.to_str().unwrap(), "--formula", "supply >= demand", "--at", "3"]);
    assert_eq!(stdout(&o), "3: true\n");
}

#[test]
fn robustness_table() {
    let m = microgrid();
    let o = spars(&["robustness", "--model", m.to_str().unwrap(), "--formula", "supply >= demand", "--at", "2", "--digits", "1"]);
    assert_eq!(stdout(&o), "2: 1.0\n");
}

#[test]
fn render_writes_dot() {
    let m = microgrid();
    let o = spars(&["render", "--model", m.to_str().unwrap(), "--formula", PSI_1]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("graph {"));
    assert!(dot.contains("\"0\" [style=solid]"));
    assert!(dot.contains("\"1\" [style=solid]"));
    assert!(dot.contains("\"4\" [style=filled"));
}

#[test]
fn formula_source_is_required() {
    let m = microgrid();
    let o = spars(&["eval", "--model", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hops_metric_flag() {
    let m = microgrid();
    let run = |metric: &str| {
        stdout(&spars(&["check", "--model", m.to_str().unwrap(), "--metric", metric, "--formula", "somewhere[0,1](supply >= demand)", "--at", "0"]))
    };
    assert_eq!(run("hops"), "0: true\n");
    assert_eq!(run("weight"), "0: false\n");
}
