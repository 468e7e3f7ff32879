//! CLI behavior: exit codes, report shape, file output and the quiet mode.

use std::process::Command;

fn homcss(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_homcss"))
        .args(args)
        .output()
        .expect("spawn homcss")
}

#[test]
fn reports_embed_the_config() {
    let out = homcss(&["code", "params", "--complex", "toric:3", "--degree", "1"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["config"]["command"], "code params");
    assert_eq!(value["config"]["complex"], "toric:3");
    assert_eq!(value["result"]["n"], 18);
    assert_eq!(value["result"]["k"], 2);
}

#[test]
fn validation_failures_exit_two() {
    let out = homcss(&["complex", "validate", "--complex", "toric:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_refusals_exit_three() {
    let out = homcss(&[
        "code", "distance", "--complex", "toric:4", "--degree", "1", "--budget", "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_flags_exit_sixty_four() {
    let out = homcss(&["code", "params", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(64));
    let out = homcss(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn budget_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_homcss"))
        .args(["code", "distance", "--complex", "toric:4", "--degree", "1"])
        .env("HOMCSS_BUDGET", "2")
        .output()
        .expect("spawn homcss");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn quiet_prints_a_single_summary_line() {
    let out = homcss(&[
        "--quiet", "bounds", "sphere-volume", "4",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("Vol(S^4)"));
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join("homcss-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = homcss(&[
        "--output",
        path.to_str().unwrap(),
        "complex",
        "homology",
        "--complex",
        "torus7",
    ]);
    assert!(out.status.success());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, out.stdout);
    let value: serde_json::Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(value["result"]["betti"], serde_json::json!([1, 2, 1]));
}

#[test]
fn workers_flag_leaves_results_unchanged() {
    let base = homcss(&[
        "code", "distance", "--complex", "product(toric:2,toric:2)", "--degree", "2",
        "--w-max", "4",
    ]);
    let pooled = homcss(&[
        "--workers", "8", "code", "distance", "--complex", "product(toric:2,toric:2)",
        "--degree", "2", "--w-max", "4",
    ]);
    assert!(base.status.success() && pooled.status.success());
    assert_eq!(base.stdout, pooled.stdout);
}
