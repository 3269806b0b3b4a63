use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn birkslice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birkslice")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn basis_n3_matches_the_displayed_matrices() {
    let out = birkslice(&["basis", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let vectors = v["result"]["vectors"].as_array().unwrap();
    assert_eq!(vectors.len(), 9);
    assert_eq!(vectors[5]["matrix"], serde_json::json!([[0, 0, 0], [0, -2, 1], [0, 0, 0]]));
    assert_eq!(vectors[8]["kind"], "offset");
    assert_eq!(v["result"]["determinant"].as_i64().unwrap().abs(), 1);
}

#[test]
fn basis_n2_is_standard() {
    let v = json(&birkslice(&["basis", "--n", "2"]));
    let m = v["result"]["matrix"].clone();
    assert_eq!(m, serde_json::json!([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["basis", "--n", "9"][..],
        &["basis", "--n", "1"],
        &["verify", "--n", "6", "--checks", "theorem4"],
        &["verify", "--n", "5"],
        &["vertices", "--n", "6"],
        &["volume", "--n", "2"],
        &["volume", "--n", "4"],
        &["volume", "--n", "5", "--force"],
        &["volume", "--input", "/nonexistent/polytope.json"],
        &["frobnicate"],
        &["basis"],
    ] {
        let out = birkslice(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn force_lifts_the_basis_cap() {
    let out = birkslice(&["--force", "basis", "--n", "9", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 81 + 1);
}

#[test]
fn verify_reports_counts() {
    let v = json(&birkslice(&["verify", "--n", "3"]));
    assert_eq!(v["passed"], true);
    let checks = v["result"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 5);
    let theorem4 = checks.iter().find(|c| c["check"] == "theorem4").unwrap();
    assert_eq!(theorem4["cycles"], 30);

    let v = json(&birkslice(&["verify", "--n", "5", "--checks", "theorem4"]));
    assert_eq!(v["result"]["checks"][0]["cycles"], 7880);
    let v = json(&birkslice(&["verify", "--n", "4", "--checks", "genpos"]));
    assert_eq!(v["result"]["checks"][0]["edges"], 240);
    assert_eq!(v["result"]["checks"][0]["parallel_edges"], 0);
}

#[test]
fn vertices_tables() {
    let v = json(&birkslice(&["vertices", "--n", "3", "--transformed"]));
    let slicing: Vec<i64> =
        v["result"]["vertices"].as_array().unwrap().iter().map(|r| r["slicing_coordinate"].as_i64().unwrap()).collect();
    assert_eq!(slicing, vec![7, 5, 6, 2, 3, 1]);

    let csv = String::from_utf8(birkslice(&["vertices", "--n", "2", "--transformed", "--format", "csv"]).stdout).unwrap();
    assert_eq!(csv, "sigma,x1,x2,x3,x4,slicing\n1 2,1,0,0,1,1\n2 1,0,1,1,0,0\n");

    let v = json(&birkslice(&["vertices", "--n", "3"]));
    let rows = v["result"]["vertices"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0]["coordinates"], serde_json::json!([1, 0, 0, 0, 1, 0, 0, 0, 1]));
    assert!(rows[0].get("slicing_coordinate").is_none());
}

#[test]
fn birkhoff_three_volume() {
    let out = birkslice(&["volume", "--n", "3", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["equal"], true);
    assert_eq!(v["result"]["total"], "1/8");
    assert_eq!(v["result"]["oracle"], "1/8");
    assert_eq!(v["result"]["slicing"]["levels"], 7);
    let levels: Vec<i64> =
        v["result"]["slicing"]["slices"].as_array().unwrap().iter().map(|s| s["level"].as_i64().unwrap()).collect();
    assert_eq!(levels, (1..=7).collect::<Vec<_>>());
}

#[test]
fn triangle_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "triangle.json", r#"{"dimension": 2, "vertices": [[0, 0], [1, 2], [2, 1]]}"#);
    let out = birkslice(&["volume", "--input", &path, "--method", "both", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "level,volume,slice_vertices\n0,0/1,1\n1,3/2,2\n2,0/1,1\ntotal_slice,3/2\ntotal_oracle,3/2\nequal,true\n"
    );
}

#[test]
fn square_file_names_the_parallel_edge() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "square.json", r#"{"dimension": 2, "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]}"#);
    let out = birkslice(&["volume", "--input", &path, "--method", "slice"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("1-general position"), "{err}");
    assert!(err.contains("(0, 0) -- (0, 1)"), "{err}");

    let oracle = json(&birkslice(&["volume", "--input", &path, "--method", "oracle"]));
    assert_eq!(oracle["result"]["total"], "1/1");
}

#[test]
fn file_preconditions() {
    let dir = tempfile::tempdir().unwrap();
    let half = write(dir.path(), "half.json", r#"{"dimension": 2, "vertices": [[0, 0], ["1/2", 0], [0, 1]]}"#);
    let out = birkslice(&["volume", "--input", &half]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not integral"));
    let oracle = json(&birkslice(&["volume", "--input", &half, "--method", "oracle"]));
    assert_eq!(oracle["result"]["total"], "1/4");

    let inner = write(dir.path(), "inner.json", r#"{"dimension": 2, "vertices": [[0, 0], [4, 0], [1, 1], [0, 4]]}"#);
    let out = birkslice(&["volume", "--input", &inner]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("vertex 2 is not extreme"));

    let seg = write(dir.path(), "seg.json", r#"{"dimension": 2, "vertices": [[0, 0], [3, 1]]}"#);
    assert_eq!(birkslice(&["volume", "--input", &seg]).status.code(), Some(2));
}

#[test]
fn explicit_edges_are_used() {
    let dir = tempfile::tempdir().unwrap();
    // A wrong edge list makes the slices wrong; the two methods then disagree.
    let path = write(
        dir.path(),
        "bad_edges.json",
        r#"{"dimension": 2, "vertices": [[0, 0], [3, 1], [4, 4], [1, 3]], "edges": [[1, 2], [2, 3], [3, 0]]}"#,
    );
    let out = birkslice(&["volume", "--input", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"]["equal"], false);
}

#[test]
fn timing_goes_to_stderr_only() {
    let out = birkslice(&["basis", "--n", "3"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(!stdout.contains("ms"));
    assert!(String::from_utf8(out.stderr).unwrap().contains(" ms"));
}

#[test]
fn help_exits_zero() {
    let out = birkslice(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("volume"));
}
