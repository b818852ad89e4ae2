//! End-to-end checks of the installed binary: determinism of the report
//! across separate processes, seed plumbing, and the text surfaces.

use std::process::{Command, Output};

fn cpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpart"))
        .args(args)
        .env_remove("CP_SEED")
        .output()
        .expect("binary runs")
}

#[test]
fn report_is_byte_identical_across_processes() {
    let first = cpart(&["report", "--seed", "31415"]);
    let second = cpart(&["report", "--seed", "31415"]);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(first.stdout, second.stdout);

    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid JSON");
    assert_eq!(parsed["schema"], "cp-report/1");
    assert_eq!(parsed["seed"], 31415);
    assert_eq!(parsed["failed"], 0);
    assert!(parsed["passed"].as_u64().expect("count") > 100);
}

#[test]
fn suite_selection_narrows_the_report() {
    let out = cpart(&["report", "--seed", "5", "--suite", "charts", "--suite", "spectrum"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    let names: Vec<&str> = parsed["suites"]
        .as_array()
        .expect("suite list")
        .iter()
        .map(|s| s["name"].as_str().expect("name"))
        .collect();
    assert_eq!(names, ["charts", "spectrum"]);
}

#[test]
fn environment_seed_overrides_the_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_cpart"))
        .args(["report", "--seed", "123"])
        .env("CP_SEED", "777")
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(parsed["seed"], 777);
}

#[test]
fn critdim_prints_the_exact_sets() {
    let out = cpart(&["critdim"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).expect("utf8");
    assert!(text.contains("euclid: dims [2, 4, 6]"), "{text}");
    assert!(text.contains("minkowski: dims [4]"), "{text}");
    // Every distinguished dimension comes with its witnessing mode.
    assert_eq!(text.matches("4*eigenvalue").count(), 4, "{text}");
}

#[test]
fn trajectory_emits_well_formed_csv() {
    let out = cpart(&["trajectory", "--tau-end", "0.02"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).expect("utf8");
    let mut lines = text.lines();
    let header = lines.next().expect("header line");
    assert!(header.starts_with("tau,re_z0,im_z0"), "{header}");
    assert!(header.ends_with("abs_bilinear,abs_sesquilinear"), "{header}");
    assert!(lines.count() >= 20);
}
