use std::path::PathBuf;

use ihwitt::cli::{run, RunReport, RunResult};
use ihwitt::simplicial::write_space;

fn ihw(args: &[&str]) -> ihwitt::cli::Outcome {
    run(std::iter::once("ihw").chain(args.iter().copied()))
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ihw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn compute_on_a_catalog_space() {
    let out = ihw(&[
        "--json",
        "compute",
        "--catalog",
        "cone_RP2",
        "--perversity",
        "m",
        "--coeff",
        "Z2,Q",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = RunReport::from_json(&out.stdout).unwrap();
    assert_eq!(report.results.len(), 2);
    match &report.results[0] {
        RunResult::Homology { table, .. } => assert_eq!(table.dims(), vec![1, 1, 0, 0]),
        other => panic!("unexpected {other:?}"),
    }
    assert!(report.input_digest.is_some());
    assert_eq!(report.to_json(), out.stdout.trim_end());
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "witt-check", "--catalog", "S_RP2", "--coeff", "Q,Z2,F4"];
    let a = ihw(&args);
    let b = ihw(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let report = RunReport::from_json(&a.stdout).unwrap();
    let RunResult::Witt { oriented, columns, .. } = &report.results[0] else {
        panic!("expected a Witt result");
    };
    assert!(!oriented);
    let verdicts: Vec<bool> = columns.iter().map(|c| c.report.witt_condition).collect();
    assert_eq!(verdicts, vec![true, false, false]);
}

#[test]
fn human_output_mentions_the_tables() {
    let out = ihw(&["compute", "--catalog", "S2", "--coeff", "Z"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains('Z'), "{}", out.stdout);
}

#[test]
fn space_files_are_accepted_and_strict_mode_rejects_non_pseudomanifolds() {
    let cone = ihwitt::catalog::catalog_complex("cone_RP2").unwrap();
    let path = temp_file("cone.json", &write_space(&cone));
    let path = path.to_str().unwrap();
    assert_eq!(ihw(&["compute", "--space", path]).code, 0);
    assert_eq!(ihw(&["compute", "--space", path, "--strict"]).code, 4);
    assert_eq!(ihw(&["witt-check", "--space", path]).code, 4);
}

#[test]
fn witt_class_and_bordism() {
    let out = ihw(&["--json", "witt-class", "--matrix", "I2", "--field", "F9"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = RunReport::from_json(&out.stdout).unwrap();
    let RunResult::WittClass { order, .. } = &report.results[0] else {
        panic!("expected a class");
    };
    assert_eq!(*order, Some(1));

    let out = ihw(&["--json", "bordism", "--n", "8", "--p", "3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = RunReport::from_json(&out.stdout).unwrap();
    let RunResult::Bordism { coefficient_group, .. } = &report.results[0] else {
        panic!("expected a bordism result");
    };
    assert_eq!(coefficient_group.to_string(), "Z4");

    let degenerate = temp_file("degenerate.txt", "2\n1 1\n1 1\n");
    assert_eq!(
        ihw(&["witt-class", "--matrix", degenerate.to_str().unwrap(), "--field", "Z5"]).code,
        5
    );
}

#[test]
fn exit_codes() {
    assert_eq!(ihw(&[]).code, 2);
    assert_eq!(ihw(&["--help"]).code, 0);
    assert_eq!(ihw(&["compute"]).code, 2);
    assert_eq!(ihw(&["compute", "--catalog", "S2", "--space", "x.json"]).code, 2);
    assert_eq!(ihw(&["compute", "--catalog", "nope"]).code, 2);
    assert_eq!(ihw(&["compute", "--catalog", "S2", "--coeff", "Z6"]).code, 2);
    assert_eq!(ihw(&["compute", "--catalog", "S2", "--perversity", "p:1,1"]).code, 3);
    assert_eq!(ihw(&["compute", "--space", "/nonexistent/space.json"]).code, 2);
}

#[test]
fn manifest_command() {
    let out = ihw(&["--json", "catalog", "manifest"]);
    assert_eq!(out.code, 0);
    let report = RunReport::from_json(&out.stdout).unwrap();
    let RunResult::Manifest { entries } = &report.results[0] else {
        panic!("expected a manifest");
    };
    assert_eq!(entries.len(), ihwitt::catalog::catalog_names().len());
}
