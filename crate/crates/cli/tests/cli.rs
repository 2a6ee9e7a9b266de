use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyonkg")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_column(text: &str, name: &str) -> Vec<f64> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let idx = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().parse().unwrap()).collect()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["check", "--e1", "e0", "--g1", "2pi/e0", "--e2", "e0", "--g2", "-2pi/e0"])), 0);
    assert_eq!(code(&run(&["spectrum", "--preset", "dyon_z", "--np-max", "10"])), 1);
    assert_eq!(code(&run(&["check", "--e1", "e0", "--g1", "2pi/", "--e2", "e0", "--g2", "0"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["spectrum", "--preset", "no_such_system"])), 2);
    assert_eq!(code(&run(&["--alpha", "0.5", "spectrum", "--preset", "hydrogen"])), 2);
}

#[test]
fn quantization_failure_exits_one() {
    let out = run(&["check", "--e1", "e0", "--g1", "0.3g0", "--e2", "e0", "--g2", "0", "--mode", "z4"]);
    assert_eq!(code(&out), 1);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["meta"]["pass"], serde_json::Value::Bool(false));
}

#[test]
fn output_is_deterministic() {
    let args = ["radial", "--preset", "dyon_z", "--l", "34", "--N", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_json_agree() {
    let csv = run(&["spectrum", "--preset", "hydrogen", "--np-max", "3"]);
    let json = run(&["spectrum", "--preset", "hydrogen", "--np-max", "3", "--format", "json"]);
    let energies = csv_column(&stdout(&csv), "E");
    let doc: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), energies.len());
    for (row, e) in rows.iter().zip(&energies) {
        assert_eq!(row["E"].as_f64().unwrap(), *e);
    }
}

#[test]
fn table1_flags_the_naive_row() {
    let out = run(&["table1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    assert!(last.ends_with("true"), "{last}");
    let stable = csv_column(&text, "binding_relativistic");
    assert!(stable.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"preset": "hydrogen", "np-max": 2, "format": "json"}"#).unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file: serde_json::Value = serde_json::from_slice(&run(&["--config", cfg, "spectrum"]).stdout).unwrap();
    assert_eq!(from_file["rows"].as_array().unwrap().len(), 3);
    let overridden: serde_json::Value =
        serde_json::from_slice(&run(&["--config", cfg, "spectrum", "--np-max", "3"]).stdout).unwrap();
    assert_eq!(overridden["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("angular.csv");
    let out = run(&["--out", path.to_str().unwrap(), "angular", "--mu", "0", "--l", "2", "--K", "1"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let y2 = csv_column(&std::fs::read_to_string(&path).unwrap(), "Y2");
    assert_eq!(y2.len(), 2000);
}

#[test]
fn angular_snaps_unless_strict() {
    let args = ["angular", "--nr", "-6", "--ns", "-1", "--l", "100", "--K", "0"];
    let snapped = run(&args);
    assert_eq!(code(&snapped), 0);
    assert!(String::from_utf8_lossy(&snapped.stderr).contains("nearest admissible"));
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(code(&run(&strict)), 1);
}

#[test]
fn density_charge_mode_and_compare() {
    let out = run(&["density", "--preset", "pionic", "--l", "0", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["rows"].as_array().unwrap().iter().all(|r| r["Pg"].as_f64().unwrap() == 0.0));
    let cmp = run(&["density", "--compare", "--format", "json"]);
    assert_eq!(code(&cmp), 0);
    let doc: serde_json::Value = serde_json::from_slice(&cmp.stdout).unwrap();
    assert!(doc["meta"].to_string().contains("ratio"));
}
