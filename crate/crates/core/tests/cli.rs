//! Runs the real `primeperm` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn primeperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primeperm"))
        .args(args)
        .output()
        .unwrap()
}

fn primeperm_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_primeperm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_json_pipes_into_verify() {
    for n in [1, 2, 3, 10, 97, 500] {
        let built = primeperm(&["construct", "--n", &n.to_string(), "--format", "json"]);
        assert_eq!(built.status.code(), Some(0));
        assert!(built.stderr.is_empty());
        let checked = primeperm_stdin(&["verify"], &built.stdout);
        assert_eq!(checked.status.code(), Some(0), "n = {n}");
        assert!(checked.stderr.is_empty());
    }
}

#[test]
fn dp_and_ryser_print_identical_counts() {
    for n in 1..=20 {
        let n = n.to_string();
        let dp = primeperm(&["count", "--n", &n, "--method", "dp"]);
        let ryser = primeperm(&["count", "--n", &n, "--method", "ryser"]);
        assert_eq!(dp.status.code(), Some(0));
        assert_eq!(stdout(&dp), stdout(&ryser), "n = {n}");
    }
}

#[test]
fn enumerate_line_count_matches_count() {
    for n in 1..=9 {
        let n = n.to_string();
        let listed = stdout(&primeperm(&["enumerate", "--n", &n]))
            .lines()
            .count();
        let counted = stdout(&primeperm(&["count", "--n", &n]));
        assert_eq!(listed.to_string(), counted.trim(), "n = {n}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        primeperm(&["verify", "--perm", "1,5,4,3,2"]).status.code(),
        Some(0)
    );
    assert_eq!(
        primeperm(&["verify", "--perm", "3,2,1,5,4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        primeperm(&["verify", "--perm", "1,1,2"]).status.code(),
        Some(3)
    );
    assert_eq!(
        primeperm(&["verify", "--perm", "1;2"]).status.code(),
        Some(64)
    );
    assert_eq!(primeperm(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(primeperm(&["count", "--n", "40"]).status.code(), Some(65));
    assert_eq!(
        primeperm(&["count", "--n", "12", "--method", "naive"])
            .status
            .code(),
        Some(65)
    );
    assert_eq!(
        primeperm(&["construct", "--n", "5", "--format", "bfile"])
            .status
            .code(),
        Some(64)
    );
}

#[test]
fn enumerate_survives_closed_pipe() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_primeperm"))
        .args(["enumerate", "--n", "14"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut out = child.stdout.take().unwrap();
    let mut first = [0u8; 16];
    std::io::Read::read_exact(&mut out, &mut first).unwrap();
    drop(out);
    let result = child.wait_with_output().unwrap();
    assert_eq!(result.status.code(), Some(0));
    assert!(result.stderr.is_empty());
}
