//! Binary-level tests: determinism of every command on the shipped
//! scenario (acceptance criterion 12), schema rejection, exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use voclink_cli::config::{reference_file, Scenario};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_voclink"))
}

fn scenario_path() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios/q_ilex.toml")
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("failed to spawn voclink")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("voclink_{}_{name}.toml", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn criterion_12_every_command_is_deterministic() {
    let scenario = scenario_path();
    let commands: Vec<Vec<&str>> = vec![
        vec!["export-builtin", "--name", "q-ilex"],
        vec!["tx-gain"],
        vec!["tx-delay"],
        vec!["channel-gain"],
        vec!["channel-delay"],
        vec!["plume-gain"],
        vec!["snr-sweep"],
        vec!["bandwidth-sweep"],
        vec!["capacity-sweep"],
        vec!["e2e-gain"],
        vec!["e2e-delay"],
        vec!["rx-response"],
    ];
    for args in &commands {
        let mut full = args.clone();
        full.extend_from_slice(&["--scenario", &scenario]);
        let first = run(&full);
        let second = run(&full);
        assert!(
            first.status.success(),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert!(!first.stdout.is_empty(), "{args:?} produced no output");
        assert_eq!(
            first.stdout, second.stdout,
            "{args:?} output differs between runs"
        );
    }
    println!(
        "[PASS] criterion 12: {} commands byte-identical across reruns",
        commands.len()
    );
}

#[test]
fn shipped_scenario_matches_the_builtin_reference() {
    let from_file = Scenario::load(&scenario_path()).unwrap();
    let builtin = Scenario::resolve(&reference_file()).unwrap();
    assert_eq!(from_file, builtin);
}

#[test]
fn invalid_eta_exits_2_and_names_the_field() {
    let mut text = std::fs::read_to_string(scenario_path()).unwrap();
    text = text.replace("eta = 0.867", "eta = 1.2");
    let path = write_temp("bad_eta", &text);
    let out = run(&["tx-gain", "--scenario", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("eta"), "stderr: {stderr}");
}

#[test]
fn unknown_key_exits_2() {
    let text = std::fs::read_to_string(scenario_path()).unwrap() + "\nmystery_knob = 1\n";
    let path = write_temp("unknown_key", &text);
    let out = run(&["tx-gain", "--scenario", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_scenario_exits_2() {
    let out = run(&["tx-gain", "--scenario", "/nonexistent/nowhere.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_frequency_list_exits_2() {
    let out = run(&["tx-gain", "--f", ""]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("empty"), "stderr: {stderr}");
}

#[test]
fn bare_names_resolve_through_the_scenario_dir() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    let out = bin()
        .args(["snr-sweep", "--x", "100", "--scenario", "q_ilex"])
        .env("VOCLINK_SCENARIO_DIR", &dir)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn out_flag_writes_the_csv_to_a_file() {
    let path = std::env::temp_dir().join(format!("voclink_{}_out.csv", std::process::id()));
    let out = run(&[
        "rx-response",
        "--f",
        "0.1,1,10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let _ = std::fs::remove_file(&path);
    assert!(written.starts_with("f_hz,normalized_gain,attenuation_db,delay_s\n"));
    assert_eq!(written.lines().count(), 4);
}

#[test]
fn snr_sweep_reproduces_the_fixture_value() {
    // x = 100 m, all five noise sources: frozen from the summation oracle.
    let out = run(&["snr-sweep", "--x", "100", "--scenario", &scenario_path()]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    let last = stdout.lines().last().unwrap();
    let snr: f64 = last.split(',').nth(2).unwrap().parse().unwrap();
    assert!(
        (snr - 1.32821479e4).abs() / 1.32821479e4 < 1e-8,
        "snr {snr}"
    );
}
