use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

use sepfam::cli::document::parse_family_input;
use sepfam::tree::phi_forward;
use sepfam::LabeledGraph;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn sepfam(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sepfam"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

const P: &str = "1,2|3,4;1,3|2,4";
const Q: &str = "1|2,3,4;1,2|3,4;1,2,3|4";

#[test]
fn check_reports_separation_and_minimality() {
    let out = sepfam(&["check", "--minimal"], P);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "separating: yes, minimal: yes");

    let out = sepfam(&["check", "--minimal"], "1,2|3,4;1,3|2,4;1|2,3,4");
    assert_eq!(out.stdout.trim(), "separating: yes, minimal: no");

    let out = sepfam(&["check"], "1,2|3,4");
    assert_eq!(out.stdout.trim(), "separating: no");
}

#[test]
fn check_accepts_documents() {
    let doc = r#"{"n": 4, "bipartitions": [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]}"#;
    let out = sepfam(&["check"], doc);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "separating: yes");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = sepfam(&["check"], "1,2|2,3");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("appears twice"), "{}", out.stderr);
    assert!(out.stdout.is_empty());

    let out = sepfam(&["check"], r#"{"n": 3"#);
    assert_eq!(out.code, 2);
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = sepfam(&["frobnicate"], "");
    assert_eq!(out.code, 2);
    let out = sepfam(&["--help"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn map_family_to_tree() {
    let out = sepfam(&["map", "family-to-tree"], Q);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "1-2,2-3,3-4");

    let out = sepfam(&["map", "family-to-tree", "--format", "prufer"], Q);
    assert_eq!(out.stdout.trim(), "2,3");
}

#[test]
fn map_rejects_families_that_are_not_maximum() {
    let out = sepfam(&["map", "family-to-tree"], P);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("domain error"), "{}", out.stderr);
}

#[test]
fn map_tree_to_family_round_trips() {
    let out = sepfam(&["map", "tree-to-family", "--format", "compact"], "1-2,2-3,3-4");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "1,2,3|4;1,2|3,4;1|2,3,4");

    let out = sepfam(&["map", "tree-to-family"], "1-3,2-3,3-4");
    assert_eq!(out.code, 0);
    let family = parse_family_input(&out.stdout).unwrap().family;
    let star = LabeledGraph::new(4, [(1, 3), (2, 3), (3, 4)]).unwrap();
    assert_eq!(phi_forward(&family), star);

    let back = sepfam(&["map", "family-to-tree"], &out.stdout);
    assert_eq!(back.stdout.trim(), "1-3,2-3,3-4");
}

#[test]
fn map_rejects_non_trees() {
    let out = sepfam(&["map", "tree-to-family"], "1-2,2-3,3-1");
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not a spanning tree"), "{}", out.stderr);
}

#[test]
fn enumerate_trees_and_families() {
    let out = sepfam(&["enumerate", "trees", "--n", "4"], "");
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 17);
    assert_eq!(lines[16], "total: 16");

    let out = sepfam(&["enumerate", "families", "--n", "4", "--size", "2"], "");
    assert!(out.stdout.ends_with("total: 3\n"), "{}", out.stdout);
    for line in out.stdout.lines().filter(|l| !l.starts_with("total")) {
        let f = parse_family_input(line).unwrap().family;
        assert!(f.is_separating());
    }

    let out = sepfam(&["enumerate", "families", "--n", "4", "--size", "3", "--proper"], "");
    assert!(out.stdout.ends_with("total: 29\n"));

    let out = sepfam(&["enumerate", "minimal-max-families", "--n", "5", "--limit", "2"], "");
    assert_eq!(out.stdout.lines().count(), 3);
    assert!(out.stdout.ends_with("total: 125\n"));
}

#[test]
fn count_quantities() {
    let out = sepfam(&["count", "tau", "--n", "4", "--k", "3", "--method", "all"], "");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "v1: 32, v2: 32, brute: 32");

    let cases: [(&[&str], &str); 5] = [
        (&["count", "sigma", "--n", "4", "--k", "3"], "29"),
        (&["count", "tau", "--n", "4", "--k", "4"], "64"),
        (&["count", "min-size-count", "--n", "5"], "140"),
        (&["count", "stirling1", "--n", "5", "--k", "2"], "50"),
        (&["count", "stirling2", "--n", "5", "--k", "2"], "15"),
    ];
    for (args, expected) in cases {
        let out = sepfam(args, "");
        assert_eq!(out.stdout.trim(), expected, "{args:?}");
    }
}

#[test]
fn count_outside_domain() {
    let out = sepfam(&["count", "tau", "--n", "1", "--k", "3"], "");
    assert_eq!(out.code, 2);
    let out = sepfam(&["count", "tau", "--n", "3", "--k", "9"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with('0'));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = sepfam(
        &["verify", "--n-max", "4", "--k-max", "6", "--out", path.to_str().unwrap()],
        "",
    );
    assert_eq!(out.code, 0, "{}", out.stdout);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["failed"], 0);
    assert_eq!(report["summary"].as_str().unwrap(), out.stdout.lines().next().unwrap());
}

#[test]
fn table_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tau.json");
    let out = sepfam(
        &["table", "tau", "--n-max", "5", "--k-max", "8", "--out", path.to_str().unwrap()],
        "",
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    let table: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let row = table["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["n"] == 4)
        .unwrap();
    assert_eq!(row["cells"][3], "64");
    assert_eq!(row["cells"][2], "32");

    let out = sepfam(&["table", "sigma", "--out", "/nonexistent-dir/t.json"], "");
    assert_eq!(out.code, 2);
}
