use std::fs;
use std::process::{Command, Output};

use assoc::formats::{read_edge_list, read_triangulations};
use assoc::run::{run_certify, run_table, TableKind};
use assoc_core::bounds::assoc_upper_bound;
use assoc_core::spectra::SolverOptions;
use assoc_core::{build_associahedron, enumerate_triangulations, Limits};
use serde_json::Value;

fn assoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assoc")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn enumerate_to_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t8.txt");
    let out = assoc(&["enumerate", "--n", "8", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let back = read_triangulations(8, fs::read(&path).unwrap().as_slice()).unwrap();
    assert_eq!(back, enumerate_triangulations(8).unwrap());
}

#[test]
fn graph_export_matches_the_library() {
    let out = assoc(&["graph", "--n", "7", "--export", "edges"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.starts_with("# vertices=42 degree=4\n"));
    let g = read_edge_list(out.stdout.as_slice()).unwrap();
    let h = build_associahedron(7).unwrap();
    assert_eq!(g.edges().collect::<Vec<_>>(), h.edges().collect::<Vec<_>>());
}

#[test]
fn spectrum_reports() {
    let v = json(&assoc(&["spectrum", "--n", "6", "--which", "min"]));
    assert!((v["value"].as_f64().unwrap() + 1.0 + 2f64.sqrt()).abs() < 1e-9);
    assert_eq!(v["method"], "dense");
    assert!(v.get("seconds").is_none());
    let v = json(&assoc(&["spectrum", "--n", "9", "--which", "second", "--solver", "iterative"]));
    assert_eq!(v["method"], "iterative");
    assert!((v["value"].as_f64().unwrap() - 5.488).abs() < 1e-3);
    assert!(v["residual"].as_f64().unwrap() <= 1e-9);
    let v = json(&assoc(&["spectrum", "--n", "6", "--which", "full", "--timing"]));
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 14);
    assert!(v["seconds"].as_f64().is_some());
}

#[test]
fn census_csv_columns() {
    let out = assoc(&["census", "--n", "7", "--oracle", "--edges"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let (vertices, edges) = text.split_once("\n\n").unwrap();
    let mut rdr = csv::Reader::from_reader(vertices.as_bytes());
    let header = rdr.headers().unwrap().clone();
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 42);
    for r in &rows {
        assert_eq!(r[col("pentagon_formula")], r[col("pentagon_oracle")]);
        assert_eq!(r[col("hexagon_total")], r[col("hexagon_oracle")]);
    }
    let mut rdr = csv::Reader::from_reader(edges.as_bytes());
    assert_eq!(rdr.records().count(), 42 * 4 / 2);
}

#[test]
fn bounds_with_a_user_collection() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("copies.txt");
    // the pentagon flip graph is a 5-cycle: one copy covering everything
    fs::write(&path, "# one copy\n0 1 3 4 2\n").unwrap();
    let g = build_associahedron(5).unwrap();
    assert!(g.has_edge(0, 1) && g.has_edge(1, 3) && g.has_edge(3, 4) && g.has_edge(4, 2) && g.has_edge(2, 0));
    let out = assoc(&["bounds", "--n", "5", "--certify", "--collection", path.to_str().unwrap(), "--pattern", "c5"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let user = v.as_array().unwrap().iter().find(|r| r["bound_name"] == "user_collection").unwrap();
    assert_eq!(user["parameters"]["m"], 1.0);
    assert_eq!(user["satisfied"], true);
    assert!((user["bound_value"].as_f64().unwrap() - user["exact_value"].as_f64().unwrap()).abs() < 1e-9);

    fs::write(&path, "0 1 2 3 4\n").unwrap();
    let out = assoc(&["bounds", "--n", "5", "--collection", path.to_str().unwrap(), "--pattern", "c5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_without_certification_have_no_exact_values() {
    let v = json(&assoc(&["bounds", "--n", "30"]));
    let arr = v.as_array().unwrap();
    assert!(arr.iter().all(|r| r["exact_value"].is_null() && r["satisfied"].is_null()));
    let upper = arr.iter().find(|r| r["bound_name"] == "split_upper").unwrap();
    let lower = arr.iter().find(|r| r["bound_name"] == "pentagon_lower").unwrap();
    let ub = upper["bound_value"].as_f64().unwrap();
    assert!((ub - assoc_upper_bound(30).unwrap()).abs() < 1e-12);
    assert!(lower["bound_value"].as_f64().unwrap() < ub);
}

#[test]
fn walk_with_a_file_test_function() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    let visits = dir.path().join("visits.csv");
    let values: String = (0..14).map(|i| format!("{}\n", (i % 3) as f64)).collect();
    fs::write(&f, values).unwrap();
    let out = assoc(&[
        "walk", "--n", "6", "--steps", "1000", "--seed", "5", "--start", "0", "--test-fn", "file", "--f",
        f.to_str().unwrap(), "--visits", visits.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["start"], 0);
    assert_eq!(v["test_function"]["kind"], "file");
    assert!(v["test_function"]["gap_upper"].as_f64().unwrap() >= 1.0 / 3.0 - 1e-9);
    let mut rdr = csv::Reader::from_path(&visits).unwrap();
    let total: u64 = rdr.records().map(|r| r.unwrap()[1].parse::<u64>().unwrap()).sum();
    assert_eq!(total, 1000);
    assert_eq!(assoc(&["walk", "--n", "6", "--test-fn", "file"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(assoc(&["enumerate", "--n", "2"]).status.code(), Some(2));
    assert_eq!(assoc(&["enumerate", "--n", "15"]).status.code(), Some(3));
    assert_eq!(assoc(&["spectrum", "--n", "5", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(assoc(&["table", "--kind", "lambda_min", "--n-max", "4"]).status.code(), Some(2));
    assert_eq!(assoc(&["frobnicate"]).status.code(), Some(2));
    let out = assoc(&["spectrum", "--n", "10", "--which", "min", "--solver", "iterative", "--max-iter", "15"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_assoc"))
        .args(["enumerate", "--n", "15"])
        .env("ASSOC_MAX_N", "15")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout.iter().filter(|&&b| b == b'\n').count(), 742_900);
}

#[test]
fn table_rows_and_formats() {
    let rows = run_table(TableKind::LambdaMin, 5, &SolverOptions::default(), &Limits::default()).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0].n_minus_3, rows[0].rounded), (2, -1.618));
    let out = assoc(&["table", "--kind", "lambda_2", "--n-max", "7"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n-3\tvalue\n2\t0.618\n3\t2.000\n4\t3.231\n");
    let v = json(&assoc(&["table", "--kind", "gap", "--n-max", "6", "--format", "json"]));
    assert!((v[1]["constant"].as_f64().unwrap() - 6f64.sqrt()).abs() < 1e-9);
}

#[test]
fn certification_through_n9_passes() {
    let claims = run_certify(9, &SolverOptions::default(), &Limits::default()).unwrap();
    let failed: Vec<_> = claims.iter().filter(|c| !c.passed).collect();
    assert!(failed.is_empty(), "{failed:?}");
    for name in ["pentagon_vertex_oracle", "hexagon_edge_oracle", "lambda_2_table", "slice_subadditivity_4_7"] {
        assert!(claims.iter().any(|c| c.claim == name), "{name}");
    }
    let small = run_certify(4, &SolverOptions::default(), &Limits::default()).unwrap();
    assert!(small.iter().any(|c| c.claim == "no_five_cycles" && c.passed));
    assert!(!small.iter().any(|c| c.claim.starts_with("pentagon")));
}
