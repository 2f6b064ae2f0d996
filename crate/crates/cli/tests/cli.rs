use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn grundy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grundy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = grundy(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("grundy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn compute_named_families() {
    assert_eq!(json(&["compute", "star:5", "grz"])["value"], 2);
    assert_eq!(json(&["compute", "Q:4", "grz"])["value"], 8);
    let s = json(&["compute", "sier:3,3", "zf"]);
    assert_eq!(s["value"], 6);
    assert_eq!(s["route"], "n - grz");
    assert_eq!(json(&["compute", "path:6", "gr"])["value"], 5);
    assert_eq!(json(&["compute", "K:4", "grt"])["value"], 2);
    assert_eq!(json(&["compute", "star:3", "grl"])["value"], 4);
    assert_eq!(json(&["compute", "cyc:4", "ptime"])["value"], 1);
    assert_eq!(json(&["compute", "path:5", "alpha"])["value"], 3);
    assert_eq!(json(&["compute", "path:5", "beta"])["value"], 2);
}

#[test]
fn zf_routes_agree() {
    for route in ["subset", "grz"] {
        let r = json(&["compute", "cart(cyc:4,path:3)", "zf", "--zf-route", route]);
        assert_eq!(r["value"], 4);
    }
}

#[test]
fn witness_is_reported_with_the_variant() {
    let r = json(&["compute", "path:3", "gr"]);
    assert_eq!(r["witness"]["variant"], "CLOSED");
    assert_eq!(r["witness"]["order"], serde_json::json!([0, 1]));
    let k = json(&["compute", "cyc:4", "grz-k", "-k", "2"]);
    assert_eq!(k["k"], 2);
    assert_eq!(k["witness"]["k"], 2);
}

#[test]
fn graph_and_hypergraph_files() {
    let g = scratch("c4.txt", "# four-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(json(&["compute", g.to_str().unwrap(), "zf"])["value"], 2);
    let h = scratch("tri.hg", "3 3\n0 1\n1 2\n0 2\n");
    assert_eq!(json(&["compute", h.to_str().unwrap(), "rho", "--hypergraph"])["value"], 2);
    assert_eq!(json(&["compute", h.to_str().unwrap(), "rho-gr", "--hypergraph"])["value"], 2);
    let bad = scratch("bad.txt", "3 1\n0 7\n");
    assert_eq!(grundy(&["compute", bad.to_str().unwrap(), "gr"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_2() {
    for args in [
        &["compute", "nope:3", "gr"][..],
        &["compute", "path:4", "nope"],
        &["compute", "path:1", "grz"],
        &["compute", "cyc:3", "grz-k", "-k", "3"],
        &["verify", "nope"],
        &["sweep", "path:n", "gr", "--param", "m=1..3"],
    ] {
        let out = grundy(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn large_graphs_need_allow_large() {
    let out = grundy(&["compute", "path:70", "alpha"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&["compute", "path:70", "alpha", "--allow-large"])["value"], 35);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "duality", "--n-max", "7", "--samples", "300"][..],
        &["verify", "products", "--budget", "small"],
        &["verify", "reduction", "--samples", "50"],
        &["verify", "kz", "--samples", "20"],
    ] {
        let out = grundy(args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
    let r = json(&["verify", "alpha-beta", "--samples", "10"]);
    assert_eq!(r["failed"], 0);
    assert_eq!(r["suite"], "alpha-beta");
}

#[test]
fn sweeps_match_formulas() {
    let r = json(&["sweep", "cart(cyc:s,path:t)", "grz", "--param", "s=3..5", "--param", "t=2..4"]);
    let rows = r["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let (s, t) = (row["params"]["s"].as_u64().unwrap(), row["params"]["t"].as_u64().unwrap());
        assert_eq!(row["value"].as_u64().unwrap(), s * t - s.min(2 * t));
        assert_eq!(row["matches"], true);
    }

    let r = json(&["sweep", "lex(path:s,path:t)", "zf", "--param", "s=3..4", "--param", "t=3..4"]);
    assert!(r["rows"].as_array().unwrap().iter().all(|row| row["matches"] == true));

    let r = json(&["sweep", "path:n", "grl", "--param", "n=2..8", "--threads", "3"]);
    let values: Vec<u64> = r["rows"].as_array().unwrap().iter().map(|row| row["value"].as_u64().unwrap()).collect();
    assert_eq!(values, (2..=8).collect::<Vec<u64>>());
    assert!(r["rows"].as_array().unwrap().iter().all(|row| row["matches"].is_null()));
}

#[test]
fn sweep_skips_cells_over_capacity() {
    let out = grundy(&["sweep", "path:n", "gr", "--param", "n=3,200"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped"));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("path:3") && !stdout.contains("path:200"));
}

#[test]
fn output_formats() {
    let csv = grundy(&["compute", "cyc:5", "grz", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("input,invariant,k,value,exact,route,elapsed_s,witness\n"));
    assert!(text.lines().nth(1).unwrap().starts_with("cyc:5,grz,,3,true"));

    let table = grundy(&["compute", "cyc:5", "grz"]);
    assert!(String::from_utf8(table.stdout).unwrap().contains("value      3"));
}

#[test]
fn runs_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_s");
        v
    };
    let a = strip(json(&["compute", "cart(cyc:4,cyc:4)", "grz"]));
    let b = strip(json(&["compute", "cart(cyc:4,cyc:4)", "grz", "--threads", "4"]));
    assert_eq!(a, b);
    let x = json(&["verify", "ptime", "--samples", "15", "--seed", "9"]);
    let y = json(&["verify", "ptime", "--samples", "15", "--seed", "9"]);
    assert_eq!(x, y);
}
