use std::fs;
use std::process::{Command, Output};

use fvslab::io::{parse_adjacency, parse_graph6, parse_graphs, to_adjacency, to_graph6};
use fvslab_core::Graph;
use proptest::prelude::*;
use serde_json::Value;
use tempfile::TempDir;

fn fvs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fvs")).args(args).output().expect("run fvs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

// K4, then the Petersen graph.
const GRAPHS: &str = "C~\nIheA@GUAo\n";

#[test]
fn exact_and_brute_agree() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "g.g6", GRAPHS);
    let a = fvs(&["fvs", "exact", &f]);
    let b = fvs(&["fvs", "brute", &f]);
    assert!(a.status.success() && b.status.success());
    let (a, b) = (json_lines(&a), json_lines(&b));
    assert_eq!(a.len(), 2);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x["size"], y["size"]);
    }
    assert_eq!((a[0]["size"].as_u64(), a[1]["size"].as_u64()), (Some(2), Some(3)));
    assert_eq!(b[0]["method"], "brute_force");
}

#[test]
fn construct_writes_a_trace() {
    let dir = TempDir::new().unwrap();
    // Dodecahedron: planar, girth 5, so the default mode is planar5.
    let f = write(&dir, "d.txt", &to_adjacency(&fvslab_core::named::dodecahedron()));
    let trace = path(&dir, "t.json");
    let out = fvs(&["fvs", "construct", &f, "--trace", &trace]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = &json_lines(&out)[0];
    assert_eq!(v["bound_numerator"], 42);
    assert_eq!(v["verified"], true);
    assert!(v["size"].as_u64().unwrap() <= 6);
    let t: Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    for key in ["steps", "witness", "bound_numerator", "r_numerator", "fallback_used"] {
        assert!(t.get(key).is_some(), "{key}");
    }
    assert!(t["steps"].as_array().is_some_and(|s| !s.is_empty()));
}

#[test]
fn construct_rejects_out_of_domain_input() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k5.g6", "D~{\n");
    let out = fvs(&["fvs", "construct", &f, "--mode", "subcubic"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn families_generate_files() {
    let dir = TempDir::new().unwrap();
    let out = fvs(&["families", "generate", "--i", "1", "--j", "0", "--out", &path(&dir, "f")]);
    assert!(out.status.success());
    let side: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("f/F_1_0.json")).unwrap()).unwrap();
    assert_eq!(side["count"], 1);
    assert!(side["members"][0]["graph6"].is_null());
    assert!(side["members"][0]["adjacency"].is_string());

    let out = fvs(&["families", "generate", "--i", "2", "--j", "1", "--out", &path(&dir, "f")]);
    assert!(out.status.success());
    let side: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("f/F_2_1.json")).unwrap()).unwrap();
    let listed = fs::read_to_string(dir.path().join("f/F_2_1.g6")).unwrap();
    assert_eq!(listed.lines().count() as u64, side["count"].as_u64().unwrap());
    for g in parse_graphs(&listed).unwrap() {
        assert_eq!((g.n(), g.m()), (5, 7));
    }
}

#[test]
fn enumerate_counts() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "c.g6");
    let out = fvs(&["enumerate", "--max-n", "5", "--filter", "connected", "--out", &f]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["count"], 31);
    assert_eq!(fs::read_to_string(&f).unwrap().lines().count(), 31);

    let out = fvs(&["enumerate", "--max-n", "13", "--out", &f]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_input_is_an_error() {
    let out = fvs(&["fvs", "exact", "/nonexistent/graphs.g6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read"));
}

fn verify_report(dir: &TempDir, input: &str, name: &str) -> (Output, String) {
    let report = path(dir, name);
    let out = fvs(&["verify", "--suite", "all", "--input", input, "--report", &report, "--no-timing"]);
    let text = fs::read_to_string(&report).unwrap();
    (out, text)
}

#[test]
fn verify_on_input() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "empty.g6", "");
    let (out, text) = verify_report(&dir, &empty, "e.jsonl");
    assert!(out.status.success());
    assert_eq!(text.lines().count(), 2);

    let some = write(&dir, "some.g6", GRAPHS);
    let (a, first) = verify_report(&dir, &some, "a.jsonl");
    let (_, second) = verify_report(&dir, &some, "b.jsonl");
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(first, second);
    let summary: Value = serde_json::from_str(first.lines().last().unwrap()).unwrap();
    assert_eq!(summary["summary"]["fail"], 0);
}

fn simple_graph() -> impl Strategy<Value = Graph> {
    (0usize..=70).prop_flat_map(|n| {
        prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..3 * n + 1).prop_map(move |pairs| {
            let mut g = Graph::from_edges(n, &[]);
            for (u, v) in pairs {
                if u != v && !g.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

fn multigraph() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..16).prop_map(move |pairs| Graph::from_edges(n, &pairs))
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in simple_graph()) {
        let s = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn adjacency_round_trip(g in multigraph()) {
        prop_assert_eq!(parse_adjacency(&to_adjacency(&g)).unwrap(), g);
    }
}

#[test]
fn adjacency_files_are_detected() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "a.txt", "# triangle with a loop\n3 4\n0 1\n1 2\n2 0\n1 1\n");
    let out = fvs(&["fvs", "exact", &f]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["size"], 1);
}
