//! End-to-end tests of the binary: exit codes, output formats, and the
//! promise that text, JSON, and CSV carry the same data.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathtoggles"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn orbits_text_json_csv_carry_the_same_sizes() {
    let text = run(&["orbits", "-n", "7", "-w", "phi"]);
    assert!(text.status.success());
    let text_out = stdout(&text);
    assert!(text_out.contains("5 orbits"));

    let json = run(&["orbits", "-n", "7", "-w", "phi", "--format", "json"]);
    assert!(json.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["schema_version"], 1);
    assert_eq!(value["orbit_count"], 5);
    let mut json_sizes: Vec<u64> = value["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["size"].as_u64().unwrap())
        .collect();
    json_sizes.sort_unstable();
    assert_eq!(json_sizes, vec![2, 3, 5, 10, 14]);

    let csv = run(&["orbits", "-n", "7", "-w", "phi", "--format", "csv"]);
    assert!(csv.status.success());
    let csv_out = stdout(&csv);
    let mut csv_sizes: Vec<u64> = csv_out
        .lines()
        .skip(1)
        .map(|line| line.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    csv_sizes.sort_unstable();
    assert_eq!(csv_sizes, json_sizes);

    // Text mode carries the same five sizes too.
    let mut text_sizes: Vec<u64> = text_out
        .lines()
        .skip(1)
        .map(|line| line.split_whitespace().nth(3).unwrap().parse().unwrap())
        .collect();
    text_sizes.sort_unstable();
    assert_eq!(text_sizes, json_sizes);
}

#[test]
fn orbits_parallel_output_is_identical() {
    let one = run(&["orbits", "-n", "10", "-w", "phi", "--states"]);
    let four = run(&[
        "orbits",
        "-n",
        "10",
        "-w",
        "phi",
        "--states",
        "--threads",
        "4",
    ]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn homomesy_exit_codes_follow_the_verdict() {
    let mesic = run(&["homomesy", "-n", "9", "-w", "phi", "-f", "x3-x7"]);
    assert!(mesic.status.success());
    assert!(stdout(&mesic).contains("0-mesic"));

    let weighted = run(&["homomesy", "-n", "7", "-w", "3,4,2,6,7,5,1", "-f", "2x1+x2"]);
    assert!(weighted.status.success());
    assert!(stdout(&weighted).contains("1-mesic"));

    let not = run(&["homomesy", "-n", "7", "-w", "phi", "-f", "x1"]);
    assert_eq!(not.status.code(), Some(1));
    assert!(stdout(&not).contains("not homomesic"));

    let sampled = run(&[
        "homomesy",
        "-n",
        "8",
        "-f",
        "x2-x7",
        "--random-words",
        "5",
        "--seed",
        "11",
    ]);
    assert!(sampled.status.success());
    assert!(stdout(&sampled).contains("verdicts agree across 6 words: yes"));
}

#[test]
fn snakes_reconstruction_and_decomposition() {
    let rebuilt = run(&["snakes", "--composition", "2121"]);
    assert!(rebuilt.status.success());
    let out = stdout(&rebuilt);
    assert!(out.contains("orbit size 5"));
    assert!(out.contains("psi 2"));

    let decomposed = run(&["snakes", "-n", "7", "--start", "1010100"]);
    assert!(decomposed.status.success());
    let out = stdout(&decomposed);
    assert!(out.contains("4 snakes"));
    assert!(out.contains("A=2211"));

    let csv = run(&["snakes", "--composition", "221121", "--format", "csv"]);
    assert!(csv.status.success());
    let out = stdout(&csv);
    assert!(out.starts_with("1,2,3,4,5,6,7,8,9,10\n"));
    assert!(out.contains("snake,letter,start_row,composition"));
}

#[test]
fn snakes_sizes_classification() {
    let out = run(&["snakes", "--sizes", "2..12", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("7,3+2+2,122,5"));
    assert!(text.contains("11,3+3+3+2,1112,5"));
    assert!(text.contains("11,3+2+2+2+2,12222,9"));
    assert!(text.contains("12,3+2+3+2+2,12122,8"));
    assert!(!text.contains("\n4,"));
    assert!(!text.contains("\n6,"));
}

#[test]
fn count_tables_match() {
    let out = run(&[
        "count",
        "--orbits",
        "2..12",
        "--reversible",
        "10",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        assert!(line.ends_with("true"), "{line}");
    }
    assert!(text.contains("reversible,10,8,8,true"));

    let missing = run(&["count"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn conjugate_reproduces_the_worked_walk() {
    let out = run(&["conjugate", "-n", "7", "-w", "3,4,2,6,7,5,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("conjugator u = 7,5,6,7,4,5,6,7"));
    assert!(text.contains("on all states: yes"));

    let trivial = run(&["conjugate", "-n", "5", "-w", "phi"]);
    assert!(trivial.status.success());
    assert!(stdout(&trivial).contains("(identity)"));

    let json = run(&["conjugate", "-n", "3", "-w", "1,2,3", "--format", "json"]);
    assert!(json.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["verified"], true);
}

#[test]
fn zigzag_checks() {
    let eta = run(&["zigzag", "-n", "7", "--check-eta"]);
    assert!(eta.status.success());
    assert!(stdout(&eta).contains("238"));

    let row = run(&["zigzag", "-n", "6", "--word", "row", "--orbits"]);
    assert!(row.status.success());
    assert!(stdout(&row).contains("matches the sweep's: yes"));

    let empty = run(&["zigzag", "-n", "5", "--word", "pro", "--empty-orbit"]);
    assert!(empty.status.success());
    assert!(stdout(&empty).contains("00000"));

    let homomesy = run(&[
        "zigzag",
        "-n",
        "6",
        "--word",
        "row",
        "--homomesy",
        "x3+x4",
        "--random-words",
        "4",
    ]);
    assert!(homomesy.status.success());
    assert!(stdout(&homomesy).contains("1-mesic"));
}

#[test]
fn survives_a_closed_pipe() {
    let out = Command::new("sh")
        .arg("-c")
        .arg(format!(
            "{} orbits -n 10 -w phi --format json --states | head -n 2",
            env!("CARGO_BIN_EXE_pathtoggles")
        ))
        .output()
        .expect("shell runs");
    assert!(
        String::from_utf8_lossy(&out.stderr).is_empty(),
        "no panic on broken pipe"
    );
}

#[test]
fn bad_input_exits_with_usage_error() {
    assert_eq!(
        run(&["homomesy", "-n", "7", "-f", "x9"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["orbits", "-n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["orbits", "-n", "40"]).status.code(), Some(2));
    assert_eq!(
        run(&["conjugate", "-n", "4", "-w", "1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["snakes", "--composition", "3121"]).status.code(),
        Some(2)
    );
}
