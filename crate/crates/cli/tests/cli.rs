//! End-to-end checks of the binary: exit codes, JSON payloads, pipelines
//! through files, and manifest reproducibility.

use std::path::Path;
use std::process::{Command, Output};

fn nonrep(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonrep"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn gen_writes_canonical_graph_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = nonrep(&["gen", "cycle", "6", "--out", "c6.json"], dir.path());
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("c6.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    // Round-trip: regenerating to stdout yields the same serialization.
    let again = nonrep(&["gen", "cycle", "6"], dir.path());
    assert_eq!(stdout_str(&again).trim(), text.trim());
}

#[test]
fn bad_parameters_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = nonrep(&["gen", "cycle", "2"], dir.path());
    assert_eq!(code(&out), 1);
    let unknown = nonrep(&["gen", "moebius", "7"], dir.path());
    assert_eq!(code(&unknown), 1);
    let missing = nonrep(
        &["verify", "walk", "--graph", "absent.json", "--colouring", "absent.json"],
        dir.path(),
    );
    assert_eq!(code(&missing), 1);
}

#[test]
fn colour_then_verify_walk_is_clean() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        code(&nonrep(&["gen", "looped-path", "13", "--out", "p13.json"], dir.path())),
        0
    );
    assert_eq!(
        code(&nonrep(
            &["colour", "plus-path", "--graph", "p13.json", "--out", "col.json"],
            dir.path()
        )),
        0
    );
    let verify = nonrep(
        &["verify", "walk", "--graph", "p13.json", "--colouring", "col.json"],
        dir.path(),
    );
    assert_eq!(code(&verify), 0);
    assert_eq!(stdout_str(&verify).trim(), r#"{"ok":true}"#);
}

#[test]
fn verify_path_reports_witness_with_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&nonrep(&["gen", "path", "4", "--out", "p4.json"], dir.path())), 0);
    std::fs::write(dir.path().join("abab.json"), r#"{"colours":[1,2,1,2]}"#).unwrap();
    let verify = nonrep(
        &["verify", "path", "--graph", "p4.json", "--colouring", "abab.json"],
        dir.path(),
    );
    assert_eq!(code(&verify), 2);
    let v: serde_json::Value = serde_json::from_str(stdout_str(&verify).trim()).unwrap();
    assert_eq!(v["type"], "path");
    assert_eq!(v["t"], 2);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn exact_solves_and_respects_budget() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&nonrep(&["gen", "cycle", "5", "--out", "c5.json"], dir.path())), 0);
    let solved = nonrep(&["exact", "pi", "--graph", "c5.json"], dir.path());
    assert_eq!(code(&solved), 0);
    let v: serde_json::Value = serde_json::from_str(stdout_str(&solved).trim()).unwrap();
    assert_eq!(v["value"], 4);
    assert_eq!(v["colours"].as_array().unwrap().len(), 5);

    assert_eq!(code(&nonrep(&["gen", "cycle", "12", "--out", "c12.json"], dir.path())), 0);
    let starved = nonrep(
        &["exact", "pi", "--graph", "c12.json", "--budget", "3"],
        dir.path(),
    );
    assert_eq!(code(&starved), 3);
    let v: serde_json::Value = serde_json::from_str(stdout_str(&starved).trim()).unwrap();
    assert_eq!(v["status"], "budget-exhausted");
}

#[test]
fn treewidth_pipeline_through_files() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        code(&nonrep(
            &["gen", "partial-ktree", "12", "--k", "2", "--seed", "9", "--out", "g.json"],
            dir.path()
        )),
        0
    );
    assert_eq!(
        code(&nonrep(
            &["decompose", "tree-partition", "--graph", "g.json", "--out", "tp.json"],
            dir.path()
        )),
        0
    );
    assert_eq!(
        code(&nonrep(
            &["verify", "tree-partition", "--graph", "g.json", "--partition", "tp.json"],
            dir.path()
        )),
        0
    );
    assert_eq!(
        code(&nonrep(
            &["colour", "treewidth-path", "--graph", "g.json", "--out", "col.json"],
            dir.path()
        )),
        0
    );
    assert_eq!(
        code(&nonrep(
            &["verify", "path", "--graph", "g.json", "--colouring", "col.json"],
            dir.path()
        )),
        0
    );
}

#[test]
fn subdivision_colouring_verifies_clean() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&nonrep(&["gen", "complete", "5", "--out", "k5.json"], dir.path())), 0);
    // The gap-one subdivision of K_6 has 26 vertices.
    assert_eq!(code(&nonrep(&["gen", "complete", "6", "--out", "k6.json"], dir.path())), 0);
    let sub = nonrep(&["gen", "subdivision", "--input", "k6.json"], dir.path());
    assert_eq!(code(&sub), 0);
    let v: serde_json::Value = serde_json::from_str(stdout_str(&sub).trim()).unwrap();
    assert_eq!(v["n"], 26);

    assert_eq!(
        code(&nonrep(
            &[
                "colour", "subdivision", "--input", "k5.json",
                "--subdivision-out", "h.json", "--out", "col.json",
            ],
            dir.path()
        )),
        0
    );
    let verify = nonrep(
        &["verify", "path", "--graph", "h.json", "--colouring", "col.json"],
        dir.path(),
    );
    assert_eq!(code(&verify), 0);
}

#[test]
fn manifest_records_run_and_reruns_reproduce() {
    let dir = tempfile::tempdir().unwrap();
    let run = |out: &str, manifest: &str| {
        nonrep(
            &[
                "gen", "random-tree", "9", "--seed", "5",
                "--out", out, "--manifest", manifest,
            ],
            dir.path(),
        )
    };
    assert_eq!(code(&run("t1.json", "m1.json")), 0);
    assert_eq!(code(&run("t2.json", "m2.json")), 0);
    let t1 = std::fs::read_to_string(dir.path().join("t1.json")).unwrap();
    let t2 = std::fs::read_to_string(dir.path().join("t2.json")).unwrap();
    assert_eq!(t1, t2, "seeded rerun diverged");
    let m1: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("m1.json")).unwrap())
            .unwrap();
    assert_eq!(m1["seed"], 5);
    assert!(m1["version"].is_string());
    assert_eq!(m1["command"].as_array().unwrap()[1], "gen");
    let hash = m1["outputs"]["t1.json"].as_str().unwrap();
    assert_eq!(hash.len(), 64, "sha256 hex expected");
    let m2: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("m2.json")).unwrap())
            .unwrap();
    assert_eq!(m2["outputs"]["t2.json"].as_str().unwrap(), hash);
}

#[test]
fn manifest_defaults_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let out = nonrep(&["gen", "petersen"], dir.path());
    assert_eq!(code(&out), 0);
    let stderr = String::from_utf8(out.stderr).unwrap();
    let v: serde_json::Value = serde_json::from_str(stderr.trim()).unwrap();
    assert_eq!(v["seed"], serde_json::Value::Null);
    assert!(v["outputs"]["stdout"].is_string());
}

#[test]
fn explore_streams_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out = nonrep(
        &[
            "explore", "--n-max", "5", "--colour-max", "2",
            "--samples", "40", "--seed", "3", "--filter-conjecture", "false",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(header["samples"], 40);
    assert_eq!(header["seed"], 3);
    assert!(header["model"].is_string());
    for line in lines {
        let w: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(w["length"].as_u64().unwrap() >= 2);
    }
}

#[test]
fn dot_output_is_graphviz() {
    let dir = tempfile::tempdir().unwrap();
    let out = nonrep(&["gen", "star", "5", "--format", "dot"], dir.path());
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    assert!(text.contains("graph"), "missing graph header: {text}");
    assert!(text.contains("--"), "missing edge syntax: {text}");
}

#[test]
fn word_commands_follow_exit_contract() {
    let dir = tempfile::tempdir().unwrap();
    let expand = nonrep(&["word", "expand", "1"], dir.path());
    assert_eq!(code(&expand), 0);
    assert_eq!(stdout_str(&expand).trim(), "12312");
    let insert = nonrep(&["word", "kp-insert", "123132123"], dir.path());
    assert_eq!(stdout_str(&insert).trim(), "1243143241243");
    let clean = nonrep(&["word", "find-square", "123132"], dir.path());
    assert_eq!(code(&clean), 0);
    let square = nonrep(&["word", "find-square", "1212"], dir.path());
    assert_eq!(code(&square), 2);
    let v: serde_json::Value = serde_json::from_str(stdout_str(&square).trim()).unwrap();
    assert_eq!(v["start"], 0);
    assert_eq!(v["half_length"], 2);
}
