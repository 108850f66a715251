//! End-to-end checks of the `wiretap` binary: flag surface, exit codes,
//! file outputs, and the enumeration-budget environment variable.

use std::path::Path;
use std::process::{Command, Output};

fn wiretap() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wiretap"))
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn det_capacity_prints_both_formulas_and_the_case() {
    let out = wiretap()
        .args(["det-capacity", "--n1", "4", "--m1", "1", "--n2", "2", "--m2", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3 bits/use (case formula)"), "{text}");
    assert!(text.contains("3 bits/use (rank formula)"), "{text}");
    assert!(text.contains("both-above"), "{text}");
    assert!(text.contains("secret-key capacity  3"), "{text}");
}

#[test]
fn det_capacity_rejects_negative_gains() {
    let out = wiretap()
        .args(["det-capacity", "--n1", "-1", "--m1", "0", "--n2", "0", "--m2", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn det_capacity_json_has_full_precision_fields() {
    let out = wiretap()
        .args(["det-capacity", "--n1", "3", "--m1", "2", "--n2", "2", "--m2", "1", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["secrecy_capacity_cases"], 1);
    assert_eq!(v["case"], "equal-differences");
    assert_eq!(v["formulas_agree"], true);
}

#[test]
fn gauss_rejects_invalid_beta_as_usage_error() {
    let out = wiretap()
        .args(["gauss", "--h1", "1", "--g1", "1", "--beta", "1.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gauss_reports_reference_values() {
    let out = wiretap()
        .args(["gauss", "--h1", "1", "--g1", "1", "--beta", "0.5", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["secrecy_lower"].as_f64().unwrap() - 0.2924812503605781).abs() < 1e-12);
    assert!((v["key_upper"].as_f64().unwrap() - 0.6609640474436812).abs() < 1e-12);
    assert_eq!(v["key_lower_valid"], true);
}

#[test]
fn verify_single_suite_and_exit_zero() {
    let out = wiretap()
        .args(["verify", "--suite", "det-formulas"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1296 checks"), "{text}");
    assert!(text.contains("[PASS]"), "{text}");
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = wiretap().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_lemma1_zero_trials_vacuous_pass() {
    let out = wiretap()
        .args(["verify", "--suite", "lemma1", "--trials", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 checks"));
}

#[test]
fn sweep_writes_csv_and_manifest_reproducibly() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("fig2.csv");
    let run = |path: &Path| {
        let out = wiretap()
            .args([
                "sweep",
                "--figure",
                "fig2",
                "--points",
                "5",
                "--h1sq-min",
                "0.01",
                "--h1sq-max",
                "2.0",
                "--out",
            ])
            .arg(path)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    };
    run(&out_path);
    let first = std::fs::read_to_string(&out_path).unwrap();
    let manifest = std::fs::read_to_string(dir.path().join("fig2.csv.manifest.json")).unwrap();
    assert!(manifest.contains("\"subcommand\": \"sweep\""));
    run(&out_path);
    let second = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(first, second, "re-running the same command must be byte-identical");
    assert!(first.starts_with("h1sq,alpha_star,rate_alpha_star,rate_alpha_1,upper_bound\n"));
}

#[test]
fn simulate_writes_rows_and_mean() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("sim.csv");
    let out = wiretap()
        .args([
            "simulate", "--n1", "2", "--m1", "1", "--n2", "1", "--m2", "1", "--n", "3",
            "--rate", "0.3333333333333333", "--rate-confusion", "0.3333333333333333",
            "--seeds", "3", "--out",
        ])
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(&out_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "seed,error,leakage_bits_per_use,covering_failure");
    assert_eq!(lines.len(), 5, "3 seed rows plus header and mean");
    assert!(lines[4].starts_with("mean,"));
}

#[test]
fn budget_env_var_lowers_the_cap() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("sim.csv");
    let out = wiretap()
        .env("WIRETAP_DET_BUDGET", "16")
        .args([
            "simulate", "--n1", "2", "--m1", "1", "--n2", "1", "--m2", "1", "--n", "3",
            "--rate", "0.3333333333333333", "--seeds", "1", "--out",
        ])
        .arg(&out_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget"), "{err}");
    assert!(err.contains("binning enumeration"), "{err}");
}

#[test]
fn simulate_rejects_unquantized_rate() {
    let dir = tempfile::tempdir().unwrap();
    let out = wiretap()
        .args([
            "simulate", "--n1", "2", "--m1", "1", "--n2", "1", "--m2", "1", "--n", "3",
            "--rate", "0.3", "--seeds", "1", "--out",
        ])
        .arg(dir.path().join("sim.csv"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
