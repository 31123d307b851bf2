mod common;

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use netdist::{parse_edge_list, Rational};
use serde_json::Value;
use tempfile::NamedTempFile;

use common::{oracle_alpha, SEVEN_NODE_EXAMPLE};

fn netdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn edge_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn analyze_reports_golden_values() {
    let chain = edge_file("# chain\n7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let o = netdist(&["analyze", path(&chain)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "alpha: 6,5,4,3,2,1",
        "average: 8/3 (2.666667)",
        "median: 2 (2.000000)",
        "gini: 5/18 (0.277778)",
    ] {
        assert!(text.contains(line), "missing {line:?} in\n{text}");
    }

    let example = edge_file(SEVEN_NODE_EXAMPLE);
    let o = netdist(&["--format", "json", "analyze", path(&example)]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["alpha"], serde_json::json!([6, 7, 6, 2, 0, 0]));
    assert_eq!(v["average"]["decimal"], "2.190476");
    assert_eq!(v["gini"]["num"], 55);
    assert_eq!(v["gini"]["den"], 126);
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn json_decimals_agree_with_fractions() {
    let o = netdist(&["--format", "json", "analyze", "--alpha", "6,7,6,2,0,0"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["average", "median", "gini"] {
        let num = v[key]["num"].as_i64().unwrap() as i128;
        let den = v[key]["den"].as_i64().unwrap() as i128;
        assert_eq!(
            v[key]["decimal"].as_str().unwrap(),
            Rational::new(num, den).to_decimal(6),
            "{key}"
        );
    }
}

#[test]
fn input_errors_map_to_exit_codes() {
    let disconnected = edge_file("4\n0 1\n2 3\n");
    let o = netdist(&["analyze", path(&disconnected)]);
    assert_eq!(o.status.code(), Some(3));

    let malformed = edge_file("3\n0 1\n0 x\n");
    let o = netdist(&["analyze", path(&malformed)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let o = netdist(&["analyze", "--alpha", "1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = netdist(&["analyze", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compare_verdicts() {
    let o = netdist(&[
        "compare",
        "--alpha",
        "21,0,0,0,0,0",
        "--alpha",
        "6,5,4,3,2,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("A majorizes B"));

    let o = netdist(&[
        "compare",
        "--alpha",
        "6,5,4,3,2,1",
        "--alpha",
        "6,5,4,3,2,1",
    ]);
    assert!(stdout(&o).contains("both"));

    let a = edge_file(SEVEN_NODE_EXAMPLE);
    let b = edge_file("7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let o = netdist(&["--format", "json", "compare", path(&a), path(&b)]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"], "A majorizes B");

    let o = netdist(&["compare", "--alpha", "3,2,1", "--alpha", "6,5,4,3,2,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lorenz_csv_rows() {
    let o = netdist(&["lorenz", "--alpha", "6,7,6,2,0,0"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,y");
    assert_eq!(lines.len() - 1, 7);
    assert!(lines.contains(&"0.500000000,0.904761905"));
    assert_eq!(*lines.last().unwrap(), "1.000000000,1.000000000");

    let o = netdist(&["lorenz", "--alpha", "6,7,6,2,0,0", "--with-baselines"]);
    let text = stdout(&o);
    let mut curves: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    curves.dedup();
    assert_eq!(curves.len(), 3, "{text}");
    assert!(text.contains("input,0.500000000,0.904761905"));
}

#[test]
fn lorenz_svg_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("curve.svg");
    let o = netdist(&[
        "lorenz",
        "--alpha",
        "6,7,6,2,0,0",
        "--out",
        "svg",
        "--with-baselines",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.matches("<polyline").count() >= 3);
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "--format",
        "json",
        "verify",
        "--n-min",
        "2",
        "--n-max",
        "15",
        "--trials",
        "60",
        "--seed",
        "11",
        "--omit-elapsed",
    ];
    let first = netdist(&args);
    let second = netdist(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["trials"], 60);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn realize_outcomes() {
    for a in ["4,1,1", "4,3,3,0"] {
        let o = netdist(&["realize", "--alpha", a]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("status: not_realizable"));
    }

    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.txt");
    let o = netdist(&[
        "realize",
        "--alpha",
        "4,4,2,0",
        "--witness",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status: realizable"));
    check_witness(&witness, &[4, 4, 2, 0]);

    let o = netdist(&["realize", "--alpha", "4,3,3,0", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("status: aborted"));

    let o = netdist(&["realize", "--alpha", "8,7,6,5,4,3,2,1"]);
    assert_eq!(o.status.code(), Some(2));
}

fn check_witness(p: &Path, expected: &[u64]) {
    let g = parse_edge_list(&std::fs::read_to_string(p).unwrap()).unwrap();
    assert_eq!(oracle_alpha(&g).unwrap(), expected);
}

#[test]
fn baseline_values() {
    let o = netdist(&["baseline", "--n", "5"]);
    let text = stdout(&o);
    assert!(text.contains("chain alpha: 4,3,2,1"));
    assert!(text.contains("chain median = average"));

    let o = netdist(&["baseline", "--n", "7"]);
    let text = stdout(&o);
    assert!(text.contains("chain average: 8/3"));
    assert!(text.contains("chain gini: 5/18"));
    assert!(text.contains("complete gini: 5/6"));

    let o = netdist(&["--format", "json", "baseline", "--n", "13"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 13);
    assert_eq!(v["chain"]["average"]["num"], 14);
    assert_eq!(v["chain"]["average"]["den"], 3);
}
