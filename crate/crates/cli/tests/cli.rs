//! End-to-end checks of the `qjudge` binary: exit codes, report formats and
//! byte-identical reruns.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qjudge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qjudge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scenario_path(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn run_prints_a_text_report_and_exits_zero() {
    let out = qjudge(&["run", &scenario_path("insider_axioms.scn")]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("axiom: |- A & A^"), "got:\n{stdout}");
    assert!(stdout.contains("axiom: A^ (+) A |-"), "got:\n{stdout}");
    assert!(stdout.contains("classical status: classically-unsatisfiable"));
}

#[test]
fn run_emits_valid_json_with_the_seed_echoed() {
    let out = qjudge(&[
        "run",
        &scenario_path("outsider_born.scn"),
        "--seed",
        "42",
        "--trials",
        "1000",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["seed"], 42);
    assert_eq!(report["trials"], 1000);
    assert_eq!(report["steps"][0]["kind"], "outsider-measure");
    assert!(report["frequencies"][0]["judgements"].is_object());
}

#[test]
fn reruns_with_the_same_seed_are_byte_identical() {
    let args = [
        "run",
        &scenario_path("liar_cheat.scn"),
        "--seed",
        "9",
        "--trials",
        "500",
        "--format",
        "json",
    ];
    assert_eq!(qjudge(&args).stdout, qjudge(&args).stdout);
}

#[test]
fn scenario_errors_exit_with_code_one() {
    let dir = std::env::temp_dir().join("qjudge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.scn");
    std::fs::write(
        &path,
        "qubit 0.6 0.8\nbasis 0 0 A\noutsider-measure\noutsider-measure\n",
    )
    .unwrap();
    let out = qjudge(&["run", &path.display().to_string()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("no-cloning"), "got: {stderr}");

    let out = qjudge(&["run", "/nonexistent/scenario.scn"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_axioms_prints_both_axioms() {
    let out = qjudge(&["check-axioms"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("\u{22a2} A & A\u{22a5}"), "got:\n{stdout}");
    assert!(stdout.contains("A\u{22a5} \u{2295} A \u{22a2}"), "got:\n{stdout}");

    let out = qjudge(&["check-axioms", "--basis", "0.785398", "0.2"]);
    assert!(out.status.success());
}

#[test]
fn usage_errors_exit_with_code_one() {
    let out = qjudge(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    let out = qjudge(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
