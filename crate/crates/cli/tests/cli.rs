use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn geodex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geodex"))
        .args(args)
        .env_remove("GEODEX_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn paley_13_is_not_geodesic_transitive() {
    let out = geodex(&["family", "paley", "13", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["gt"], false);
    assert_eq!(v["dt"], true);
    assert_eq!(v["geodesicLevel"], 1);
}

#[test]
fn odd_four_uses_valency_naming() {
    let out = geodex(&["family", "odd", "4", "--json"]);
    let v = json(&out);
    assert_eq!(v["intersectionArray"]["b"], serde_json::json!([4, 3, 3]));
    assert_eq!(v["intersectionArray"]["c"], serde_json::json!([1, 1, 2]));
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["family", "nope"][..],
        &["family", "paley", "15"],
        &["family", "hamming", "3"],
        &["family", "cycle", "x"],
        &["file", "/nonexistent/graph.g6"],
        &["--cap", "5", "family", "complete", "6"],
    ] {
        let out = geodex(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn cap_from_environment() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_geodex"))
            .args(["family", "complete", "11"])
            .env("GEODEX_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("10").status.code(), Some(2));
    assert_eq!(run("11").status.code(), Some(0));
    assert_eq!(run("ten").status.code(), Some(2));
}

#[test]
fn tsv_header_is_fixed() {
    let out = geodex(&["family", "petersen", "--tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id\tn\tvalency\tarray\td\tg\ts\tautOrder\tgeodesicLevel\tGT\tDT"
    );
    assert_eq!(
        lines.next().unwrap(),
        "family:petersen\t10\t3\t{3, 2; 1, 1}\t2\t5\t3\t120\t2\tY\tY"
    );
}

#[test]
fn early_exit_flag_changes_only_timings() {
    for family in [&["paley", "13"][..], &["hamming", "3", "3"], &["g22-6"]] {
        let mut a = vec!["family"];
        a.extend_from_slice(family);
        a.push("--json");
        let mut on = json(&geodex(&a));
        a.push("--no-early-exit");
        let mut off = json(&geodex(&a));
        on.as_object_mut().unwrap().remove("timings");
        off.as_object_mut().unwrap().remove("timings");
        assert_eq!(on, off, "{family:?}");
    }
}

#[test]
fn oracle_flag_reports_agreement() {
    let out = geodex(&["family", "johnson", "5", "2", "--oracle", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["oracle"]["agrees"], true);
    assert_eq!(v["oracle"]["autOrder"], 120);
}

#[test]
fn ag2_two_carries_a_warning() {
    let v = json(&geodex(&["family", "ag2", "2", "--json"]));
    assert_eq!(v["n"], 8);
    assert!(v["warnings"][0].as_str().unwrap().contains("C8"));
}

#[test]
fn file_formats() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("k4.g6");
    fs::write(&g6, "C~\n").unwrap();
    let mat = dir.path().join("c4");
    fs::write(&mat, "0101\n1010\n0101\n1010\n").unwrap();

    let v = json(&geodex(&["file", g6.to_str().unwrap(), "--json"]));
    assert_eq!(v["autOrder"], "24");
    assert_eq!(v["provenance"], "external");
    assert!(v["warnings"][0].as_str().unwrap().contains("external"));

    let v = json(&geodex(&["file", mat.to_str().unwrap(), "--json"]));
    assert_eq!(v["autOrder"], "8");

    let forced = geodex(&["file", mat.to_str().unwrap(), "--format", "graph6"]);
    assert_eq!(forced.status.code(), Some(2));

    let bad = dir.path().join("asym.txt");
    fs::write(&bad, "01\n00\n").unwrap();
    let out = geodex(&["file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("row 1, column 2"));
}

#[test]
fn batch_writes_reports_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("pair.g6"), "C~\nIheA@GUAo\n").unwrap();
    fs::write(dir.path().join("k3.txt"), "011\n101\n110\n").unwrap();
    let out_dir = dir.path().join("out");
    let out = geodex(&[
        "batch",
        dir.path().to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let mut names: Vec<String> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(names, ["k3.txt.json", "pair.g6_0.json", "pair.g6_1.json", "summary.tsv"]);
    let summary = fs::read_to_string(out_dir.join("summary.tsv")).unwrap();
    assert_eq!(summary.lines().count(), 4);
    let petersen: Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("pair.g6_1.json")).unwrap()).unwrap();
    assert_eq!(petersen["autOrder"], "120");
}

#[test]
fn batch_reports_bad_files_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("good.g6"), "C~\n").unwrap();
    fs::write(dir.path().join("bad.g6"), "C~~\n").unwrap();
    let out = geodex(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let summary = fs::read_to_string(dir.path().join("reports/summary.tsv")).unwrap();
    assert_eq!(summary.lines().count(), 2);
}

#[test]
fn selftest_passes() {
    let out = geodex(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("reference rows reproduced"));
}
