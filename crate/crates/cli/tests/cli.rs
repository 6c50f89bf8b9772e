use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_construct-shapes")).args(args).output().unwrap()
}

fn analyze(query: &str, shapes: &str, extra: &[&str]) -> Output {
    let (q, s) = (fixture(query), fixture(shapes));
    let mut args = vec!["analyze", "--query", q.to_str().unwrap(), "--shapes", s.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("construct-shapes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn analyze_running_example() {
    let o = analyze("q1.sparql", "s1.shacl", &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == ":E <: exists :p . :B"));
    assert!(out.lines().any(|l| l == ":E <: :B"));
    assert_eq!(out.lines().last(), Some("# 26 shapes from 46 candidates"));
}

#[test]
fn lines_format_matches_fixture() {
    let o = analyze("q1.sparql", "s1.shacl", &["--format", "lines", "--parallel"]);
    assert_eq!(o.status.code(), Some(0));
    let want = std::fs::read_to_string(fixture("q1.expected")).unwrap();
    let mut got: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    let mut want: Vec<String> = want.lines().filter(|l| !l.trim().is_empty()).map(str::to_string).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn output_is_deterministic() {
    let a = analyze("q1.sparql", "s1.shacl", &["--parallel"]);
    let b = analyze("q1.sparql", "s1.shacl", &[]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn debug_dump_precedes_output() {
    let out = stdout(&analyze("q1.sparql", "s1.shacl", &["--debug"]));
    let headers: Vec<&str> = out.lines().filter(|l| l.starts_with("# ")).collect();
    assert_eq!(headers[..5], ["# Σ_in", "# Σ_vkb", "# Σ_map", "# Σ_prop", "# output"]);
    let first_shape = out.lines().position(|l| l == ":E <: :B").unwrap();
    let marker = out.lines().position(|l| l == "# output").unwrap();
    assert!(marker < first_shape);
}

#[test]
fn parse_errors_exit_with_one() {
    let bad = temp_file("bad.sparql", "CONSTRUCT { ?x a :A } WHERE { ?x a }");
    let s = fixture("s1.shacl");
    let o = run(&["analyze", "--query", bad.to_str().unwrap(), "--shapes", s.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad.sparql"));
    assert!(err.contains("line 1, column 36"));

    let o = run(&["analyze", "--query", "/nonexistent.sparql", "--shapes", s.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["analyze", "--rule-budget", "0"]).status.code(), Some(1));
}

#[test]
fn exhausted_budget_exits_with_two() {
    let o = analyze("q1.sparql", "s1.shacl", &["--rule-budget", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.lines().any(|l| l.starts_with("undecided: ")));
}

#[test]
fn check_finds_no_violations() {
    let q1 = fixture("q1.sparql");
    let s1 = fixture("s1.shacl");
    let o = run(&["check", "--query", q1.to_str().unwrap(), "--shapes", s1.to_str().unwrap(), "--bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("0 violations"));

    let id = temp_file("identity.sparql", "CONSTRUCT { ?x a :A . ?x :p ?y } WHERE { ?x a :A . ?x :p ?y }");
    let empty = temp_file("empty.shacl", "");
    let o = run(&["check", "--query", id.to_str().unwrap(), "--shapes", empty.to_str().unwrap(), "--bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("0 violations"));
}

#[test]
fn check_running_example_at_bound_three() {
    let q1 = fixture("q1.sparql");
    let s1 = fixture("s1.shacl");
    let o = run(&["check", "--query", q1.to_str().unwrap(), "--shapes", s1.to_str().unwrap(), "--bound", "3", "--parallel"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("0 violations"));
}

#[test]
fn check_reports_injected_violation() {
    let q = temp_file("copy.sparql", "CONSTRUCT { ?x a :A } WHERE { ?x a :A }");
    let empty = temp_file("none.shacl", "");
    let o = run(&[
        "check",
        "--query",
        q.to_str().unwrap(),
        "--shapes",
        empty.to_str().unwrap(),
        "--bound",
        "1",
        "--inject",
        ":A <: exists :p . :A",
    ]);
    assert_ne!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("violation: :A <: exists :p . :A"));
    let lines: Vec<&str> = out.lines().collect();
    let input = lines.iter().position(|l| *l == "# input graph").unwrap();
    let result = lines.iter().position(|l| *l == "# result graph").unwrap();
    assert!(lines[input + 1..result].iter().any(|l| l.ends_with(" a :A .")));
    assert!(lines[result + 1..].iter().any(|l| l.ends_with(" a :A .")));
}

#[test]
fn profile_summaries() {
    let o = run(&["profile", "--class", "SMALL", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "class SMALL: samples 0, average - ms, median - ms, timeouts 0");

    let o = run(&["profile", "--class", "small", "--samples", "3", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("class SMALL: samples 3, average "));
    assert_eq!(run(&["profile", "--class", "HUGE"]).status.code(), Some(1));
}

#[test]
fn help_exits_cleanly() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("analyze"));
}
