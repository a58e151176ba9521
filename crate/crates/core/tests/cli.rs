use std::path::Path;
use std::process::{Command, Output};

fn numrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numrad"))
        .args(args)
        .env_remove("NUMRAD_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn bounds_table_for_the_weighted_shift() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a.csv", "0,2,0\n0,0,3\n4,0,0\n");
    let out = numrad(&["bounds", &file, "--bound", "kitt-sum", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("kitt-sum")).expect("kitt-sum row");
    assert_eq!(row.split_whitespace().nth(1), Some("3.5"), "{text}");
}

#[test]
fn bounds_json_lists_the_whole_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "j.json",
        r#"{"n": 2, "data": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]}"#,
    );
    let out = numrad(&["bounds", &file, "--format", "json", "--t-grid", "101"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["bounds"].as_array().unwrap().len(), 14);
    assert!((v["omega"]["value"].as_f64().unwrap() - 0.5).abs() < 1e-9);
}

#[test]
fn zero_matrix_gives_zero_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "z.csv", "0,0\n0,0\n");
    let out = numrad(&["bounds", &file, "--format", "csv", "--t-grid", "51"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("bound,value,inner,t,slack"));
    for line in lines {
        assert_eq!(line.split(',').nth(1), Some("0"), "{line}");
    }
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.csv", "1,2\n3,x\n");
    let out = numrad(&["bounds", &file]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(numrad(&["bounds", "/nonexistent/matrix.json"]).status.code(), Some(2));
    let good = write(dir.path(), "ok.csv", "1,0\n0,1\n");
    assert_eq!(numrad(&["bounds", &good, "--bound", "nope"]).status.code(), Some(2));
}

#[test]
fn radius_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a.csv", "0,2,0\n0,0,3\n4,0,0\n");
    let out = numrad(&["radius", &file, "--oracle-trials", "500", "--seed", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let sweep = v["sweep"]["value"].as_f64().unwrap();
    let oracle = v["oracle"]["value"].as_f64().unwrap();
    assert!(oracle <= sweep + 1e-6 && oracle > 0.99 * sweep);
}

#[test]
fn reproduce_examples_reports_each_figure() {
    let out = numrad(&["reproduce-examples"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7, "{text}");
    assert!(text.contains("example1.kitt-sum = 3.5 PASS"));
    let all_pass = text.lines().all(|l| l.contains(" PASS"));
    assert_eq!(out.status.code(), Some(if all_pass { 0 } else { 1 }));
}

#[test]
fn fuzz_is_deterministic_and_clean() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let run = |path: &Path, jobs: &str| {
        numrad(&[
            "fuzz", "--ensemble", "nilpotent", "--dim", "2-5", "--trials", "8", "--seed", "17", "--jobs", jobs,
            "-o", path.to_str().unwrap(),
        ])
    };
    assert_eq!(run(&a, "1").status.code(), Some(0));
    assert_eq!(run(&b, "2").status.code(), Some(0));
    let (ta, tb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ta, tb);
    assert_eq!(ta.lines().count(), 9);
    assert!(ta.lines().next().unwrap().starts_with("trial,seed,dim,omega,classic,"));
    assert!(ta.lines().skip(1).all(|l| l.ends_with(',')), "violations column should be empty");
}

#[test]
fn fuzz_seed_from_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_numrad"))
            .args(["fuzz", "--ensemble", "ginibre", "--dim", "3", "--trials", "2"])
            .env("NUMRAD_SEED", seed)
            .output()
            .unwrap()
    };
    let (x, y, z) = (run("5"), run("5"), run("6"));
    assert_eq!(x.stdout, y.stdout);
    assert_ne!(x.stdout, z.stdout);
}
