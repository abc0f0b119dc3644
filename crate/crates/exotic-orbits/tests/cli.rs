//! End-to-end checks of the `exorbit` binary: exit codes, byte-stable
//! output, and the documented input/output formats.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn exorbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exorbit"))
        .args(args)
        .output()
        .expect("run the binary")
}

fn exorbit_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_exorbit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn the binary");
    child
        .stdin
        .take()
        .expect("piped stdin")
        .write_all(input.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("collect output")
}

fn stdout_text(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["enumerate", "--kind", "segmented", "--n", "6", "--format", "json"],
        vec!["enumerate", "--kind", "bipartition", "--n", "5", "--format", "csv"],
        vec!["table", "--n", "4", "--format", "csv"],
        vec!["table", "--n", "3", "--format", "json"],
    ] {
        let first = exorbit(&args);
        let second = exorbit(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn enumerate_row_counts_agree_across_kinds() {
    let n = "9";
    let count = |kind: &str| {
        let out = exorbit(&["enumerate", "--kind", kind, "--n", n, "--format", "json"]);
        assert!(out.status.success());
        stdout_text(&out).lines().count()
    };
    let marked = count("marked");
    assert_eq!(count("segmented"), marked);
    assert_eq!(count("bipartition"), marked);
}

#[test]
fn map_translates_and_round_trips() {
    // Fully marked one-row partition: ((3),(3)) corresponds to ((2),(1)).
    let out = exorbit_with_stdin(
        &["map", "--from", "mp", "--to", "p2"],
        "{\"lambda\":[3],\"marks\":[3]}\n",
    );
    assert!(out.status.success());
    assert_eq!(stdout_text(&out), "{\"first\":[2],\"second\":[1]}\n");

    let back = exorbit_with_stdin(
        &["map", "--from", "p2", "--to", "mp"],
        "{\"first\":[2],\"second\":[1]}",
    );
    assert!(back.status.success());
    assert_eq!(stdout_text(&back), "{\"lambda\":[3],\"marks\":[3]}\n");

    // A pairing in the other direction: ((1),(1,1)) <-> ((2,1),(0,1)).
    let out = exorbit_with_stdin(
        &["map", "--from", "p2", "--to", "mp"],
        "{\"first\":[1],\"second\":[1,1]}",
    );
    assert_eq!(stdout_text(&out), "{\"lambda\":[2,1],\"marks\":[0,1]}\n");

    // Identity map re-emits canonical bytes.
    let echo = exorbit_with_stdin(
        &["map", "--from", "sp", "--to", "sp"],
        "{\"lambda\":[5,2],\"segments\":[[1,2],[4,5]]}",
    );
    assert!(echo.status.success());
    assert_eq!(
        stdout_text(&echo),
        "{\"lambda\":[5,2],\"segments\":[[1,2],[4,5]]}\n"
    );
}

#[test]
fn map_rejects_invalid_objects_with_exit_3() {
    // Segment endpoint 3 is not a part of (2,1).
    let out = exorbit_with_stdin(
        &["map", "--from", "sp", "--to", "mp"],
        "{\"lambda\":[2,1],\"segments\":[[3,3]]}",
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty(), "expected a validation report");

    // Malformed JSON.
    let out = exorbit_with_stdin(&["map", "--from", "mp", "--to", "mp"], "{\"lambda\":");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reduce_command_matches_documented_examples() {
    let out = exorbit(&["reduce", "--lambda", "2,1", "--marks", "1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout_text(&out), "{\"lambda\":[2,1],\"marks\":[0,1]}\n");

    let out = exorbit(&["reduce", "--lambda", "4,2", "--marks", "3,1"]);
    assert_eq!(stdout_text(&out), "{\"lambda\":[4,2],\"marks\":[3,0]}\n");

    let out = exorbit(&["reduce", "--lambda", "3", "--marks", "2"]);
    assert_eq!(stdout_text(&out), "{\"lambda\":[3],\"marks\":[2]}\n");
}

#[test]
fn reduce_trace_is_valid_json_with_before_after_chain() {
    let out = exorbit(&["reduce", "--lambda", "2,2,2", "--marks", "2,1,2", "--trace"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_text(&out)).expect("valid JSON");
    let trace = value["trace"].as_array().expect("trace array");
    assert!(!trace.is_empty());
    for pair in trace.windows(2) {
        assert_eq!(pair[0]["after"], pair[1]["before"], "steps must chain");
    }
    assert_eq!(trace.last().unwrap()["after"], value["result"]);
}

#[test]
fn reduce_rejects_bad_bounds_with_exit_3() {
    let out = exorbit(&["reduce", "--lambda", "2,1", "--marks", "0,2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = exorbit(&["reduce", "--lambda", "1,2", "--marks", "0,0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(exorbit(&["enumerate", "--kind", "marked"]).status.code(), Some(2));
    assert_eq!(
        exorbit(&["enumerate", "--kind", "weird", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        exorbit(&["enumerate", "--kind", "marked", "--n", "65"]).status.code(),
        Some(2)
    );
    assert_eq!(exorbit(&["verify", "--n-max", "13"]).status.code(), Some(2));
    assert_eq!(
        exorbit(&["verify", "--oracle-n-max", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(exorbit(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn verify_small_bounds_pass_with_exit_0() {
    let out = exorbit(&["verify", "--n-max", "4", "--oracle-n-max", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&stdout_text(&out)).expect("report is JSON");
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    assert_eq!(report["n_max"], serde_json::json!(4));
    assert!(report["checks"].as_array().expect("checks").len() >= 10);
}
