//! End-to-end tests of the `stpps` binary over the bundled instance
//! corpus: output shapes, exit codes, and round-tripping of emitted
//! artifacts.

use std::path::PathBuf;
use std::process::{Command, Output};

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stpps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn curve_on_path_has_single_breakpoint_at_two() {
    let out = run(&["curve", instance("path3.json").to_str().unwrap(), "--st"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "lambda,value,left_slope,right_slope,attainer");
    assert_eq!(rows.len(), 2, "exactly one breakpoint row: {text}");
    assert!(rows[1].starts_with("2,"), "breakpoint at λ=2: {text}");
}

#[test]
fn orient_check_on_cycle_reports_witness_with_exit_two() {
    let out = run(&[
        "orient",
        "check",
        instance("cycle4.json").to_str().unwrap(),
        "-k",
        "1",
        "-l",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let report = stdout_json(&out);
    assert_eq!(report["status"], "infeasible");
    assert_eq!(report["result"]["witness"], "s|a,t,b");
}

#[test]
fn orient_check_accepts_plain_text_hypergraphs() {
    let out = run(&[
        "orient",
        "check",
        instance("cycle4.txt").to_str().unwrap(),
        "--s",
        "0",
        "--t",
        "2",
        "-k",
        "1",
        "-l",
        "1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["result"]["feasible"], true);
}

#[test]
fn kpart_with_k_equal_n_returns_singletons() {
    let out = run(&["kpart", instance("fig2.json").to_str().unwrap(), "-k", "7"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["result"]["partition"], "s|a|b|c|d|e|t");
    assert_eq!(report["result"]["mode"]["kind"], "sequence_exact");
}

#[test]
fn kpart_budget_guard_exits_three() {
    let out = run(&[
        "kpart",
        instance("fig2.json").to_str().unwrap(),
        "-k",
        "3",
        "--budget-n",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn pps_report_round_trips_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["pps", instance("fig2.json").to_str().unwrap(), "--st"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["status"], "ok");
    assert_eq!(
        report["result"]["sequence"]["partitions"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
    let seq_path = dir.path().join("seq.json");
    std::fs::write(&seq_path, &out.stdout).unwrap();
    let validated = run(&[
        "validate",
        seq_path.to_str().unwrap(),
        instance("fig2.json").to_str().unwrap(),
    ]);
    assert!(
        validated.status.success(),
        "{}",
        String::from_utf8_lossy(&validated.stdout)
    );
    assert_eq!(stdout_json(&validated)["result"]["valid"], true);
}

#[test]
fn emitted_orientation_reparses() {
    let out = run(&[
        "orient",
        "find",
        instance("cycle4.json").to_str().unwrap(),
        "-k",
        "1",
        "-l",
        "1",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let text = report["result"]["orientation"]["text"].as_str().unwrap();
    let parsed = stpps_core::Orientation::parse_text(text).unwrap();
    assert_eq!(parsed.to_text(), text);
}

#[test]
fn gen_is_deterministic_and_loadable() {
    let a = run(&["gen", "--kind", "graph-cut", "--n", "5", "--seed", "42"]);
    let b = run(&["gen", "--kind", "graph-cut", "--n", "5", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let inst = stpps_core::parse_instance(&text).unwrap();
    assert_eq!(inst.terminals().unwrap(), (0, 4));
}

#[test]
fn malformed_instance_exits_three_with_line_info() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\n  \"n\": oops\n}").unwrap();
    let out = run(&["pps", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let report = stdout_json(&out);
    assert!(
        report["error"].as_str().unwrap().contains("line"),
        "{report}"
    );
}

#[test]
fn corpus_instances_all_load_and_curve() {
    for name in ["fig2.json", "path3.json", "k4.json", "coverage5.json"] {
        let out = run(&["curve", instance(name).to_str().unwrap()]);
        assert!(out.status.success(), "{name}");
        let out = run(&["curve", instance(name).to_str().unwrap(), "--st"]);
        assert!(out.status.success(), "{name} --st");
    }
}
