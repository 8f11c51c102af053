use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qderiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qderiv"))
        .args(args)
        .env_remove("QDERIV_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qderiv(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    qderiv(args).status.code()
}

#[test]
fn small_table_at_zero() {
    assert_eq!(stdout(&["table", "a_small", "--n", "0"]), "1\n");
}

#[test]
fn fibonacci_triangle() {
    let text = stdout(&["table", "fib", "--n", "6"]);
    let rows: Vec<Vec<u32>> = text
        .lines()
        .map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows[6], [1, 4, 6, 10, 5, 6, 1, 1]);
    assert_eq!(rows.len(), 7);
}

#[test]
fn table_a_json_has_table_two_cells() {
    let v: Value = serde_json::from_str(&stdout(&["table", "A", "--n", "4", "--format", "json"])).unwrap();
    assert_eq!(v["kind"], "A");
    assert_eq!(v["n_max"], 4);
    let has = |n: u64, k: i64, a: u64, b: u64, coeffs: &[&str]| {
        v["entries"].as_array().unwrap().iter().any(|e| {
            e["n"] == n && e["k"] == k && e["a"] == a && e["b"] == b && e["poly"]["coeffs"] == serde_json::json!(coeffs)
        })
    };
    assert!(has(0, 0, 1, 0, &["1"]));
    assert!(has(2, 1, 1, 0, &["0", "1"]));
    assert!(has(1, 0, 1, 1, &["1"]));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "1.9", "--n", "4", "--order", "10"]), Some(0));
    assert_eq!(code(&["verify", "bogus.id"]), Some(2));
    assert_eq!(code(&["verify", "1.9", "--n", "8", "--order", "5"]), Some(2));
    assert_eq!(code(&["verify", "1.9", "--format", "latex"]), Some(2));
    assert_eq!(code(&["table", "nope"]), Some(2));
    assert_eq!(code(&["series", "E", "--classical"]), Some(2));
}

#[test]
fn verify_reports_are_json_lines_in_registry_order() {
    let args = ["verify", "table3", "1.9", "table1", "--n", "3", "--order", "6", "--format", "json"];
    let serial = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let parallel = stdout(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(serial, parallel);
    let ids: Vec<String> = serial
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(ids, ["table1", "table3", "1.9"]);
}

#[test]
fn oracle_matches_table() {
    for fam in ["A", "B", "Ac"] {
        assert_eq!(
            stdout(&["oracle", fam, "--n", "3", "--format", "json"]),
            stdout(&["table", fam, "--n", "3", "--format", "json"]),
            "{fam}"
        );
    }
}

#[test]
fn oracle_compositions_at_two() {
    let text = stdout(&["oracle", "Ac", "--n", "2", "--format", "csv"]);
    let row_two: Vec<&str> = text.lines().filter(|l| l.starts_with("2,")).collect();
    assert_eq!(row_two, ["2,\"(0,1,1,0)\",1 + q", "2,\"(0,2)\",q", "2,\"(2,0)\",1"]);
}

#[test]
fn oracle_bound() {
    assert_eq!(code(&["oracle", "A", "--n", "99"]), Some(2));
    assert_eq!(code(&["oracle", "A", "--n", "3", "--bound-bruteforce", "2"]), Some(2));
}

fn cached(dir: &Path, args: &[&str]) -> String {
    stdout(&[args, &["--cache-dir", dir.to_str().unwrap()]].concat())
}

#[test]
fn cache_is_invisible_and_distrusts_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let plain = stdout(&["table", "B", "--n", "5"]);
    assert_eq!(cached(dir.path(), &["table", "B", "--n", "5"]), plain);
    let file = dir.path().join("B-5.json");
    assert!(file.exists());
    assert_eq!(cached(dir.path(), &["table", "B", "--n", "5"]), plain);

    let mut doc: Value = serde_json::from_slice(&fs::read(&file).unwrap()).unwrap();
    doc["payload"]["entries"][1]["poly"]["coeffs"] = serde_json::json!(["5"]);
    fs::write(&file, serde_json::to_vec(&doc).unwrap()).unwrap();
    assert_eq!(cached(dir.path(), &["table", "B", "--n", "5"]), plain);

    fs::write(&file, "{").unwrap();
    assert_eq!(cached(dir.path(), &["table", "B", "--n", "5"]), plain);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_qderiv"))
        .args(["table", "Ac", "--n", "3"])
        .env("QDERIV_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("Ac-3.json").exists());
}

#[test]
fn verify_through_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "table2", "table4", "symmetry", "--n", "4", "--order", "4"];
    let first = cached(dir.path(), &args);
    assert_eq!(cached(dir.path(), &args), first);
    assert!(first.lines().all(|l| l.starts_with("pass ")));
}

#[test]
fn export_writes_stamped_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    stdout(&["export", "springer", "A", "fib", "--n", "3", "--out-dir", out]);
    for fam in ["A", "fib", "springer"] {
        let doc: Value = serde_json::from_slice(&fs::read(dir.path().join(format!("{fam}-3.json"))).unwrap()).unwrap();
        assert_eq!(doc["schema_version"], 1);
        assert_eq!(doc["family"], fam);
        assert_eq!(doc["n_max"], 3);
        assert_eq!(doc["sha256"].as_str().unwrap().len(), 64);
    }
    let doc: Value = serde_json::from_slice(&fs::read(dir.path().join("A-3.json")).unwrap()).unwrap();
    let table: Value = serde_json::from_str(&stdout(&["table", "A", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(doc["payload"], table);
}

#[test]
fn every_format_is_deterministic() {
    for fam in ["a_small", "b_small", "A", "B", "Ac", "carlitz", "fib", "springer", "tq"] {
        for format in ["text", "json", "csv", "latex"] {
            let args = ["table", fam, "--n", "4", "--format", format];
            assert_eq!(stdout(&args), stdout(&args), "{fam} {format}");
        }
    }
}

#[test]
fn series_output() {
    assert_eq!(stdout(&["series", "tan", "--classical", "--order", "5", "--format", "csv"]), "n,coeff\n0,0\n1,1\n2,0\n3,2\n4,0\n5,16\n");
    let v: Value = serde_json::from_str(&stdout(&["series", "Sec", "--order", "4", "--format", "json"])).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["mode"], "q");
}
