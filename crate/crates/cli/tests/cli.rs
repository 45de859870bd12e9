use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use supertrop_cli::{parse_matrix, run_command, ExitStatus};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn supertrop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supertrop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn with_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".trop").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn det_of_worked_matrix() {
    let p = data("worked3x3.trop");
    for method in ["brute", "expand", "fast", "auto"] {
        let out = supertrop(&["det", "--method", method, p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), "8g\n");
    }
}

#[test]
fn witness_of_worked_matrix() {
    let out = supertrop(&["witness", data("worked3x3.trop").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "7 7 10\nvalidation: ok\n");
}

#[test]
fn pinv_of_singular_matrix_is_a_domain_error() {
    let out = supertrop(&["pinv", data("singular.trop").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tropically singular"));
}

#[test]
fn pinv_of_regular_matrix() {
    let out = supertrop(&["pinv", data("regular.trop").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "2 2\n-3 -2\n-1 -3\nA*B pseudo unit: true\nB*A pseudo unit: true\n"
    );
}

#[test]
fn structured_and_plain_inputs_agree() {
    let plain = supertrop(&["--format", "json", "pinv", data("regular.trop").to_str().unwrap()]);
    let json = supertrop(&["--format", "json", "pinv", data("regular.json").to_str().unwrap()]);
    let a: Value = serde_json::from_slice(&plain.stdout).unwrap();
    let b: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["result"]["pseudo_inverse"]["rows"][0][0], serde_json::json!({"v": "-3", "g": false}));
}

#[test]
fn rank_and_minor() {
    let p = data("worked3x3.trop");
    assert_eq!(stdout(&supertrop(&["rank", p.to_str().unwrap()])), "2\nminor rows 1 2 cols 1 2\n");
    let out = stdout(&supertrop(&["minor-max", p.to_str().unwrap()]));
    assert!(out.starts_with("rows 1 2 cols 1 2\nsize 2\ndet 5\n"));
}

#[test]
fn depend_reports_both_outcomes() {
    let dep = with_file("2 2\n0 1\n1 2\n");
    assert_eq!(
        stdout(&supertrop(&["depend", dep.path().to_str().unwrap()])),
        "true\ncoefficients 1 0\nvalidation: ok\n"
    );
    let indep = supertrop(&["depend", data("regular.trop").to_str().unwrap()]);
    assert_eq!(stdout(&indep), "false\n");
    let witness = supertrop(&["witness", data("regular.trop").to_str().unwrap()]);
    assert_eq!(witness.status.code(), Some(3));
}

#[test]
fn solve_outcomes() {
    let s = with_file("2 2\n0 1\n-1 0\n");
    let out = stdout(&supertrop(&["solve", s.path().to_str().unwrap()]));
    assert!(out.contains("kind pure-real") && out.contains("solution true"), "{out}");
    let out = stdout(&supertrop(&["solve", data("regular.trop").to_str().unwrap()]));
    assert!(out.contains("nonsingular"));
    let out = stdout(&supertrop(&["solve", data("singular.trop").to_str().unwrap()]));
    assert!(out.starts_with("no pure-real solution: form(s) 1 2"), "{out}");
}

#[test]
fn digraph_export() {
    let g = with_file("2 2\n0 -inf\n0g -1\n");
    let out = stdout(&supertrop(&["digraph", g.path().to_str().unwrap()]));
    assert_eq!(out, "1 1 0\n2 1 0g\n2 2 -1\n");
    let out = stdout(&supertrop(&["digraph", "--zero", "--multicycle", "2", g.path().to_str().unwrap()]));
    assert_eq!(out, "1 1 0\n2 1 0g\nmulticycle 2 weight -1\n");
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_supertrop"))
        .args(["det", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"2 2\n0 1\n1 2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "2g\n");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let bad = with_file("2 2\n0 1\n2 zz\n");
    let out = supertrop(&["det", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 3"));
    let ragged = with_file("2 2\n0 1\n2\n");
    assert_eq!(supertrop(&["det", ragged.path().to_str().unwrap()]).status.code(), Some(2));
    let missing = supertrop(&["det", "/nonexistent/file.trop"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(supertrop(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(supertrop(&["det"]).status.code(), Some(1));
    assert_eq!(supertrop(&["det", "--method", "quick", "x.trop"]).status.code(), Some(1));
    assert_eq!(supertrop(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_3() {
    let wide = with_file("1 2\n0 1\n");
    assert_eq!(supertrop(&["det", wide.path().to_str().unwrap()]).status.code(), Some(3));
    let p = data("worked3x3.trop");
    assert_eq!(supertrop(&["--max-n", "2", "det", p.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn check_is_deterministic() {
    let a = supertrop(&["check", "--seed", "7", "--count", "10", "--max-n", "4"]);
    let b = supertrop(&["check", "--seed", "7", "--count", "10", "--max-n", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("witness validates: "));
    assert!(!stdout(&a).contains(" 1 failed") && stdout(&a).matches(" 0 failed").count() == 5);
}

#[test]
fn bench_prints_a_table() {
    let out = stdout(&supertrop(&["bench", "--max-n", "4", "--reps", "1"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].contains("brute_ms") && lines[0].contains("fast_ms"));
}

#[test]
fn library_entry_point_matches_binary() {
    let p = data("worked3x3.trop");
    let run = run_command(["supertrop", "--format", "json", "det", p.to_str().unwrap()]);
    assert_eq!(run.status, ExitStatus::Success);
    let report = run.report.unwrap();
    assert_eq!(report.command, "det");
    assert_eq!(report.result["determinant"], "8g");
    assert_eq!(report.validation.get("methods_agree"), Some(&true));
    let parsed: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(parsed["result"], report.result);
    let doc = parse_matrix(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(report.input_digest, Some(doc.digest()));
}

#[test]
fn plain_round_trip_is_byte_identical() {
    let text = "2 3\n1/2 -inf 3g\n0 -7/3g 4\n";
    let doc = parse_matrix(text).unwrap();
    assert_eq!(doc.render(), text);
    assert_eq!(parse_matrix(&doc.render()).unwrap(), doc);
}
