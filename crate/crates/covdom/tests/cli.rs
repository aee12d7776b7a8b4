//! End-to-end checks of the command-line interface: output formats, file
//! round trips, and the 0/1/2 exit-code contract.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn covdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("covdom-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn fixture_path(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn dom_prints_certificate_json() {
    let out = covdom(&[
        "dom",
        "--kind",
        "plain",
        "--input",
        &fixture_path("petersen.g6"),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["value"], 3);
    assert_eq!(json["optimal"], true);
    assert_eq!(json["kind"], "plain");
    assert!(json["set"].as_array().unwrap().len() == 3);
}

#[test]
fn dom_accepts_edge_list_input() {
    let dir = temp_dir("edgelist");
    let path = dir.join("triangle.txt");
    std::fs::write(&path, "3 3\n0 1\n1 2\n2 0\n").unwrap();
    let out = covdom(&["dom", "--kind", "plain", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["value"], 1);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dom_rejects_missing_file_with_exit_2() {
    let out = covdom(&["dom", "--kind", "plain", "--input", "/no/such/file.g6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_error_exits_2() {
    let out = covdom(&["dom", "--kind", "bogus", "--input", "x.g6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shipped_projection_fixture_verifies() {
    let out = covdom(&[
        "verify-cover",
        "--base",
        &fixture_path("petersen.g6"),
        "--total",
        &fixture_path("dodecahedron.g6"),
        "--proj",
        &fixture_path("petersen_dodecahedron.proj"),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("valid 2-fold cover"));
}

#[test]
fn shipped_fixture_files_match_registry() {
    use covdom::harness::{fixture, Fixture};

    let Fixture::Cover {
        base,
        total,
        projection,
    } = fixture("petersen-dodecahedron").unwrap()
    else {
        panic!("cover fixture");
    };
    let read = |name: &str| std::fs::read_to_string(fixture_path(name)).unwrap();
    assert_eq!(read("petersen.g6").trim(), covdom::graph6::to_graph6(&base));
    assert_eq!(
        read("dodecahedron.g6").trim(),
        covdom::graph6::to_graph6(&total)
    );
    assert_eq!(read("petersen_dodecahedron.proj"), projection.to_text());
}

#[test]
fn broken_projection_fails_with_exit_1() {
    let dir = temp_dir("badproj");
    let proj = dir.join("bad.proj");
    // Identity-style map with one fiber emptied: vertex 19 remapped to 0.
    let mut text = String::from("2 20 10\n");
    for v in 0..20 {
        let image = if v == 19 { 0 } else { v % 10 };
        text.push_str(&format!("{v} {image}\n"));
    }
    std::fs::write(&proj, text).unwrap();
    let out = covdom(&[
        "verify-cover",
        "--base",
        &fixture_path("petersen.g6"),
        "--total",
        &fixture_path("dodecahedron.g6"),
        "--proj",
        proj.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn lift_then_verify_roundtrip() {
    let dir = temp_dir("lift");
    let out_g6 = dir.join("lifted.g6");
    let out_proj = dir.join("lifted.proj");
    let lift_out = covdom(&[
        "lift",
        "--base",
        &fixture_path("petersen.g6"),
        "--k",
        "3",
        "--seed",
        "9",
        "--out",
        out_g6.to_str().unwrap(),
        "--proj-out",
        out_proj.to_str().unwrap(),
    ]);
    assert!(lift_out.status.success(), "{lift_out:?}");

    let verify_out = covdom(&[
        "verify-cover",
        "--base",
        &fixture_path("petersen.g6"),
        "--total",
        out_g6.to_str().unwrap(),
        "--proj",
        out_proj.to_str().unwrap(),
    ]);
    assert!(verify_out.status.success());
    assert!(stdout(&verify_out).contains("valid 3-fold cover"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn lift_from_voltage_file() {
    let dir = temp_dir("voltfile");
    // C3 with a transposition on one edge lifts to a single 6-cycle.
    let base = dir.join("c3.txt");
    std::fs::write(&base, "3 3\n0 1\n1 2\n2 0\n").unwrap();
    let voltages = dir.join("v.txt");
    std::fs::write(&voltages, "0 1 0 1\n0 2 1 0\n1 2 0 1\n").unwrap();
    let out_g6 = dir.join("c6.g6");
    let out_proj = dir.join("c6.proj");
    let out = covdom(&[
        "lift",
        "--base",
        base.to_str().unwrap(),
        "--k",
        "2",
        "--voltages",
        voltages.to_str().unwrap(),
        "--out",
        out_g6.to_str().unwrap(),
        "--proj-out",
        out_proj.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("6 vertices, 6 edges, 1 component(s)"));

    let lifted =
        covdom::graph6::parse_graph6(std::fs::read_to_string(&out_g6).unwrap().trim()).unwrap();
    assert_eq!(lifted.n(), 6);
    assert!(lifted.is_connected());
    assert!((0..6).all(|v| lifted.degree(v) == 2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bounds_reports_all_kinds_and_passes() {
    let out = covdom(&[
        "bounds",
        "--base",
        &fixture_path("petersen.g6"),
        "--total",
        &fixture_path("dodecahedron.g6"),
        "--proj",
        &fixture_path("petersen_dodecahedron.proj"),
    ]);
    assert!(out.status.success(), "{out:?}");
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["violations"].as_array().unwrap().len(), 0);
    assert_eq!(json["c_obs"], "1/1");
    assert_eq!(json["reports"].as_array().unwrap().len(), 3);
    assert_eq!(json["reports"][0]["exact_total"]["exact"]["value"], 6);
}

#[test]
fn greedy_prints_trace() {
    let dir = temp_dir("greedy");
    let path = dir.join("c5.txt");
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = covdom(&["greedy", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["order"], serde_json::json!([0, 2]));
    assert_eq!(json["white_counts"], serde_json::json!([3, 2]));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn hunt_writes_loadable_records() {
    let dir = temp_dir("hunt");
    let out_path = dir.join("records.jsonl");
    let out = covdom(&[
        "hunt",
        "--base",
        &fixture_path("petersen.g6"),
        "--k",
        "2",
        "--trials",
        "3",
        "--seed",
        "5",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let records = covdom::harness::load(&out_path).unwrap();
    assert_eq!(records.len(), 3);
    assert!(records.iter().all(|r| r.k == 2 && r.gamma_f == 3));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn fixtures_list_names_all() {
    let out = covdom(&["fixtures", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in covdom::harness::FIXTURE_NAMES {
        assert!(text.contains(name), "missing {name}");
    }
}
