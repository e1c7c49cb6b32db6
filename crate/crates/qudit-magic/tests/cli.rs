use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qudit-magic"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    let body: String = csv.lines().skip(1).map(|l| format!("{l}\n")).collect();
    csv::Reader::from_reader(body.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn value(csv: &str, key: &str) -> String {
    rows(csv)
        .into_iter()
        .find(|r| r[0] == key)
        .map(|r| r[1].clone())
        .unwrap()
}

#[test]
fn iterate_ququint() {
    let out = stdout(&["iterate", "--d", "5", "--m", "1", "--eps", "0.1"]);
    assert!(out.starts_with("# manifest {\"command\":\"iterate\""));
    let r = &rows(&out)[0];
    let eps: f64 = r[1].parse().unwrap();
    let p: f64 = r[2].parse().unwrap();
    assert!((eps - 0.8075 / 42.8125).abs() < 1e-9);
    assert!((p - 42.8125 / 64.0).abs() < 1e-9);
    assert_eq!(r[1], "1.88613139e-2");
}

#[test]
fn iterate_grid_is_a_curve() {
    let out = stdout(&["iterate", "--d", "3", "--m", "2", "--grid", "8"]);
    let r = rows(&out);
    assert_eq!(r.len(), 9);
    assert_eq!(r[0][1].parse::<f64>().unwrap(), 0.0);
}

#[test]
fn threshold_qutrit() {
    let out = stdout(&["threshold", "--d", "3", "--m", "2"]);
    let eps: f64 = rows(&out)[0][2].parse().unwrap();
    assert!((eps - 0.211001).abs() < 1e-6);
}

#[test]
fn inject_ququint() {
    let out = stdout(&["inject", "--d", "5", "--eps", "0.05"]);
    let r = &rows(&out)[0];
    assert_eq!(r[4], "true");
    let dev: f64 = r[2].parse().unwrap();
    assert!(dev <= 0.1 + 1e-10);
    let branches: Vec<f64> = r[5].split(';').map(|x| x.parse().unwrap()).collect();
    assert!(branches.iter().all(|p| (p - 0.2).abs() < 1e-12));
}

#[test]
fn verify_reports_failure_with_exit_code() {
    let out = run(&["verify", "--d", "3", "--m", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(value(&text, "gate_exists"), "false");
    assert_eq!(value(&text, "passed"), "false");
}

#[test]
fn verify_flagship_codes() {
    for (d, m) in [("5", "1"), ("3", "2")] {
        let text = stdout(&["verify", "--d", d, "--m", m]);
        assert_eq!(value(&text, "passed"), "true");
        assert_eq!(value(&text, "distance"), "2");
    }
}

#[test]
fn csv_is_byte_identical_across_runs() {
    let args = ["tables"];
    assert_eq!(stdout(&args), stdout(&args));
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    stdout(&[
        "yield",
        "--d",
        "5",
        "--m",
        "1",
        "--eps",
        "0.05,0.1",
        "--eps-target",
        "1e-9",
        "--out",
        a.to_str().unwrap(),
    ]);
    let out = Command::new(env!("CARGO_BIN_EXE_qudit-magic"))
        .args([
            "yield",
            "--d",
            "5",
            "--m",
            "1",
            "--eps",
            "0.05,0.1",
            "--eps-target",
            "1e-9",
            "--out",
            b.to_str().unwrap(),
        ])
        .env("QUDIT_MAGIC_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn tables_mark_missing_cells() {
    let out = stdout(&["tables"]);
    let r = rows(&out);
    assert_eq!(r.len(), 32);
    assert_eq!(r.iter().filter(|x| x[3] == "NA").count(), 4);
    assert!(r
        .iter()
        .any(|x| x[0] == "2" && x[1] == "4" && x[2] == "2.46497352e0"));
}

#[test]
fn json_output_carries_manifest() {
    let out = stdout(&["gate", "--d", "3", "--m", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["manifest"]["command"], "gate");
    assert!(v["manifest"]["wall_clock_seconds"].is_number());
    assert_eq!(v["passed"], true);
    assert!(v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["key"] == "lambda" && r["value"] == "1;0;-1"));
}

#[test]
fn code_and_region() {
    let out = stdout(&["code", "--d", "5", "--m", "1"]);
    let text = value(&out, "text");
    let code = qudit_magic::format::parse_qrm(&text).unwrap();
    assert_eq!(code.n(), 4);
    let out = stdout(&["region", "--grid", "4"]);
    assert_eq!(rows(&out).len(), 15);
}

#[test]
fn usage_errors() {
    let out = run(&["threshold", "--d", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--m"));
    let out = run(&["tables"]
        .iter()
        .copied()
        .chain(["--format", "xml"])
        .collect::<Vec<_>>());
    assert!(!out.status.success());
}
