use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn distvol(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_distvol"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SQUARE: &str = "# unit square\n2 4\n0 0\n1 0\n0 1\n1 1\n";

#[test]
fn bounds_prints_exact_value() {
    let o = distvol(&["bounds", "g", "--k", "2", "--m", "1", "--t", "3", "--format", "csv"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "108\n");
}

#[test]
fn gen_then_goodness_through_stdin() {
    let grid = distvol(&["gen", "grid", "--d", "2", "--side", "4"], "");
    let o = distvol(&["goodness", "--a", "2"], &stdout(&grid));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    // pinned by the exhaustive scan
    assert_eq!(v["observed_m"], 4);
    assert_eq!(v["n"], 16);
}

#[test]
fn find_on_square_and_verify_output() {
    let dir = std::env::temp_dir().join(format!("distvol-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let points = dir.join("square.txt");
    std::fs::write(&points, SQUARE).unwrap();
    let points = points.to_str().unwrap();

    let o = distvol(&["find", "--a", "2", "--mode", "auto", "--seed", "7", points], "");
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["subset"].as_array().unwrap().len(), 2);
    let result = dir.join("found.json");
    std::fs::write(&result, stdout(&o)).unwrap();

    let o = distvol(&["verify", "--result", result.to_str().unwrap(), points], "");
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["valid"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(distvol(&["nope"], "").status.code(), Some(2));
    assert_eq!(distvol(&["find", "--a", "2", "--mode", "sideways"], SQUARE).status.code(), Some(2));
    assert_eq!(distvol(&["find", "--a", "2"], "2 1\n0\n").status.code(), Some(2));
    assert_eq!(distvol(&["bench", "no-such-suite"], "").status.code(), Some(2));
    let o = distvol(&["find", "--a", "2", "--t", "3", "--max-retries", "4"], SQUARE);
    assert_eq!(o.status.code(), Some(1));
    let collinear = "2 3\n0 0\n1 1\n2 2\n";
    let o = distvol(&["find", "--a", "3", "--variant", "hprime"], collinear);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rejected"]["witness"], serde_json::json!([0, 1, 2]));
    assert_eq!(distvol(&["--help"], "").status.code(), Some(0));
}

#[test]
fn bench_tables() {
    let o = distvol(&["bench", "grids-2d"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let names: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(names, ["grid-4x4", "grid-6x6", "grid-8x8", "grid-10x10"]);

    let empty = distvol(&["bench", "random-2d", "--budget", "0"], "");
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(stdout(&empty).lines().count(), 1);
}

#[test]
fn random_suite_sizes_are_pinned() {
    let o = distvol(&["bench", "random-2d", "--seed", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    let sizes: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(7).unwrap().to_string())
        .collect();
    assert_eq!(sizes, PINNED_RANDOM_SIZES);
}

const PINNED_RANDOM_SIZES: [&str; 5] = ["2", "2", "6", "8", "3"];
