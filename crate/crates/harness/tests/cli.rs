use std::process::{Command, Output};

use bialgebra::{algebra_to_json, builtin_algebra};

fn trigkz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigkz")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn check_algebra_builtins_pass() {
    for name in ["sl2", "gl11"] {
        let out = trigkz(&["check-algebra", "--algebra", name]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["summary"]["failed"], 0);
        assert!(v["records"].as_array().unwrap().len() >= 4);
    }
}

#[test]
fn check_algebra_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = builtin_algebra("gl11").unwrap();
    spec.form[0][0] += 0.5;
    let path = dir.path().join("bad.json");
    std::fs::write(&path, algebra_to_json(&spec)).unwrap();
    assert_eq!(trigkz(&["check-algebra", "--algebra", path.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(trigkz(&["check-algebra", "--algebra", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(trigkz(&["check-algebra"]).status.code(), Some(2));
}

#[test]
fn r_matrix_at_zero_is_identity() {
    let v = json(&trigkz(&["r-matrix", "--algebra", "gl11", "--rep", "vector", "--h", "0"]));
    let m = &v["matrices"][0];
    for i in 0..4 {
        for j in 0..4 {
            let want = if i == j { 1.0 } else { 0.0 };
            assert_eq!(m[i][j], serde_json::json!([want, 0.0]));
        }
    }
    assert_eq!(v["report"]["records"][0]["id"], "qybe");
}

#[test]
fn r_matrix_series_has_classical_first_order() {
    let out = trigkz(&["r-matrix", "--algebra", "sl2", "--series", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let m = v["matrices"].as_array().unwrap();
    assert_eq!(m.len(), 3);
    // order h: diag(1/4, -1/4, -1/4, 1/4) plus e⊗f
    assert_eq!(m[1][0][0], serde_json::json!([0.25, 0.0]));
    assert_eq!(m[1][1][2], serde_json::json!([1.0, 0.0]));
    assert_eq!(v["report"]["records"][0]["residual"], 0.0);
}

#[test]
fn monodromy_word_and_trace() {
    let out = trigkz(&["monodromy", "--algebra", "sl2", "--n", "2", "--h", "0.2", "--s", "0.5", "--word", "b1 X1 b1'"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let rec = &v["report"]["records"][0];
    assert_eq!(rec["id"], "inverse_consistency");
    assert!(rec["note"].as_str().unwrap().starts_with("trace="));
    assert_eq!(v["matrices"][0].as_array().unwrap().len(), 4);
}

#[test]
fn monodromy_rejects_bad_input() {
    for args in [
        vec!["--n", "2", "--h", "0.2", "--word", "b2"],
        vec!["--n", "0", "--h", "0.2", "--word", "X1"],
        vec!["--n", "2", "--h", "zero", "--word", "X1"],
        vec!["--n", "2", "--h", "0.2", "--word", "y1"],
        vec!["--n", "2", "--h", "0.2", "--s", "1,2", "--word", "X1"],
    ] {
        let mut full = vec!["monodromy", "--algebra", "sl2"];
        full.extend(args.iter());
        assert_eq!(trigkz(&full).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_writes_report_and_sets_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let out = dir.path().join("report.csv");
    std::fs::write(&cfg, r#"{"algebra": "sl2", "max_word_len": 2}"#).unwrap();
    let run = trigkz(&["verify", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap(), "--format", "csv", "--jobs", "2"]);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("id,digest,residual,tolerance,pass,wall_time,note"));
    assert_eq!(text.lines().count(), 16);

    // --tol tightens the trace comparison until it fails
    let run = trigkz(&["verify", "--config", cfg.to_str().unwrap(), "--tol", "1e-30"]);
    assert_eq!(run.status.code(), Some(1));
    let v = json(&run);
    let failed: Vec<_> = v["records"].as_array().unwrap().iter().filter(|r| r["pass"] == false).map(|r| r["id"].clone()).collect();
    assert_eq!(failed, [serde_json::json!("compare_traces[h=0.2]")]);
}

#[test]
fn verify_config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"algebra": "sl2", "n": 0}"#).unwrap();
    assert_eq!(trigkz(&["verify", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&cfg, "{").unwrap();
    assert_eq!(trigkz(&["verify", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(trigkz(&["verify", "--config", "/nonexistent.json"]).status.code(), Some(2));
    std::fs::write(&cfg, r#"{"algebra": "sl2"}"#).unwrap();
    assert_eq!(trigkz(&["verify", "--config", cfg.to_str().unwrap(), "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(trigkz(&["verify", "--config", cfg.to_str().unwrap(), "--format", "xml"]).status.code(), Some(2));
}
