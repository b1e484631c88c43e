use std::path::Path;
use std::process::{Command, Output};

fn ucurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ucurve")).args(args).output().unwrap()
}

fn fixture() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/legacy_counterexample.json").to_string()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn generate_then_solve() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = ucurve(&[
        "generate",
        "--kind",
        "subset-sum",
        "--n",
        "8",
        "--count",
        "3",
        "--seed",
        "42",
        "--out",
        d,
    ]);
    assert!(out.status.success());
    let file = dir.path().join("subset-sum-n08-001.json");
    assert!(file.exists());

    let mut costs = Vec::new();
    for alg in ["ucs", "ubb", "exhaustive"] {
        let out = ucurve(&["solve", "--algorithm", alg, "--instance", file.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let v = stdout_json(&out);
        assert_eq!(v["algorithm"], alg);
        costs.push(v["best_cost"].as_f64().unwrap());
    }
    assert!(costs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn budget_exit_code() {
    let out = ucurve(&["solve", "--algorithm", "ubb", "--instance", &fixture(), "--budget", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["budget_exhausted"], true);
    assert!(v["computed_nodes"].as_u64().unwrap() <= 3);
}

#[test]
fn cost_target_stops_without_error() {
    let out = ucurve(&[
        "solve",
        "--algorithm",
        "ucs",
        "--instance",
        &fixture(),
        "--cost-target",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["target_reached"], true);
}

#[test]
fn invalid_input_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"kind":"subset_sum","n":2,"weights":[1],"target":1}"#).unwrap();
    let out = ucurve(&["solve", "--algorithm", "ucs", "--instance", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let out = ucurve(&["solve", "--algorithm", "bfs", "--instance", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let out = ucurve(&["solve", "--algorithm", "ucs", "--instance", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(3));
    let out = ucurve(&[
        "solve",
        "--algorithm",
        "ucs",
        "--instance",
        &fixture(),
        "--budget",
        "1",
        "--cost-target",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn samples_input() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(
        ucurve(&["generate", "--kind", "samples", "--n", "6", "--rows", "80", "--out", d])
            .status
            .success()
    );
    let f = dir.path().join("samples-n06-000.txt");
    let out = ucurve(&["solve", "--algorithm", "sffs", "--samples", f.to_str().unwrap()]);
    assert!(out.status.success());
    let cost = stdout_json(&out)["best_cost"].as_f64().unwrap();
    assert!((0.0..=1.0).contains(&cost));
}

#[test]
fn trace_emits_json_lines() {
    let out = ucurve(&[
        "solve",
        "--algorithm",
        "ucs",
        "--instance",
        &fixture(),
        "--trace",
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = String::from_utf8(out.stderr)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines.iter().any(|l| l["event"] == "dfs_start"));
    assert!(lines.iter().any(|l| l["event"] == "restrict"));
}

#[test]
fn verify_reports_witness() {
    let out = ucurve(&["verify", "--instance", &fixture(), "--mode", "exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["result"], "ok");

    let dir = tempfile::tempdir().unwrap();
    let hump = dir.path().join("hump.json");
    std::fs::write(
        &hump,
        r#"{"kind":"explicit","n":2,"costs":{"00":0,"10":5,"01":0,"11":0}}"#,
    )
    .unwrap();
    let out = ucurve(&["verify", "--instance", hump.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["result"], "violation");
    assert_eq!(v["y"], "10");
    let out = ucurve(&[
        "verify",
        "--instance",
        hump.to_str().unwrap(),
        "--mode",
        "sampled",
        "--chains",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn counterexample_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("ce.json");
    let out = ucurve(&[
        "find-counterexample",
        "--n",
        "5",
        "--trials",
        "10000",
        "--seed",
        "7",
        "--out",
        f.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let legacy = ucurve(&[
        "solve",
        "--algorithm",
        "ucurve-legacy",
        "--instance",
        f.to_str().unwrap(),
        "--seed",
        "7",
    ]);
    assert_eq!(stdout_json(&legacy)["best_cost"], v["legacy_cost"]);
    let none = ucurve(&["find-counterexample", "--n", "5", "--trials", "0"]);
    assert_eq!(none.status.code(), Some(1));
}

fn bench(config: &Path, out: &Path, extra: &[&str]) -> Output {
    let mut args = vec![
        "bench",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    ucurve(&args)
}

#[test]
fn bench_modes_write_reports() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bench.json");
    std::fs::write(&config, r#"{"sizes":[5,6],"instances_per_size":4,"seed":1}"#).unwrap();

    let opt = dir.path().join("opt");
    assert!(bench(&config, &opt, &["--mode", "optimal"]).status.success());
    for f in ["optimal.csv", "optimal.json", "optimal_runs.csv", "optimal_timing.csv"] {
        assert!(opt.join(f).exists(), "{f}");
    }

    let par = dir.path().join("par");
    assert!(bench(&config, &par, &["--mode", "optimal", "--jobs", "2"])
        .status
        .success());
    assert!(!par.join("optimal_timing.csv").exists());
    assert_eq!(
        std::fs::read(opt.join("optimal.csv")).unwrap(),
        std::fs::read(par.join("optimal.csv")).unwrap()
    );

    let sub = dir.path().join("sub");
    assert!(bench(&config, &sub, &["--mode", "suboptimal", "--format", "csv"])
        .status
        .success());
    assert!(sub.join("thresholds.csv").exists() && sub.join("suboptimal.csv").exists());
    assert!(!sub.join("suboptimal.json").exists());

    let dynamics = dir.path().join("dyn");
    assert!(bench(&config, &dynamics, &["--mode", "dynamics"]).status.success());
    assert!(dynamics.join("dynamics.csv").exists());

    std::fs::write(&config, r#"{"sizes":[5],"instances_per_size":0,"seed":1}"#).unwrap();
    assert_eq!(bench(&config, &opt, &[]).status.code(), Some(3));
}
