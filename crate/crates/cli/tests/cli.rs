use std::path::PathBuf;
use std::process::{Command, Output};

use partfun::graph::text::{self, GraphFile};
use partfun::{Matrix, Multigraph, Pinning, Poly, WeightMatrix};
use proptest::prelude::*;
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_partfun"));
    c.env_remove("PARTFUN_BUDGET");
    c
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, contents).unwrap();
        p
    }
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn stderr_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).unwrap()
}

const TRIANGLE: &str = "# K3\nv 3\ne 0 1\ne 1 2\ne 0 2\n";
const P3: &str = "v 3\ne 0 1\ne 1 2\n";
const INDEP: &str = r#"{"ring":"int","n":2,"entries":[["1","1"],["1","0"]]}"#;

#[test]
fn classify_indep_set_is_hard() {
    let f = Files::new();
    let m = f.write("i.json", INDEP);
    let o = run(&["classify", "--matrix", m.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "sharp-p-hard");
    assert!(stdout(&o).starts_with(r#"{"verdict":"sharp-p-hard","#));
}

#[test]
fn fast_eval_on_the_triangle() {
    let f = Files::new();
    let m = f.write("m.json", r#"{"ring":"int","n":2,"entries":[["1","2"],["2","4"]]}"#);
    let g = f.write("k3.txt", TRIANGLE);
    for fast in [true, false] {
        let mut args = vec!["eval", "--matrix", m.to_str().unwrap(), "--graph", g.to_str().unwrap()];
        if fast {
            args.push("--fast");
        }
        let o = run(&args);
        assert!(o.status.success());
        assert_eq!(stdout(&o), r#"{"value":"125"}"#);
    }
}

#[test]
fn eval_falls_back_and_honours_pins_and_weights() {
    let f = Files::new();
    let m = f.write("i.json", INDEP);
    let g = f.write("p3.txt", "v 3\ne 0 1\ne 1 2\np 1 1\n");
    // Middle vertex pinned to the occupied state: both ends empty.
    let o = run(&["eval", "--fast", "--matrix", m.to_str().unwrap(), "--graph", g.to_str().unwrap()]);
    assert_eq!(stdout(&o), r#"{"value":"1"}"#);
    let g = f.write("p3b.txt", P3);
    let d = f.write("d.json", r#"{"ring":"int","diag":["1","2"]}"#);
    // Weighted independent sets of P3: 1 + 3*2 + 2*2 (two ends).
    let o = run(&["eval", "--matrix", m.to_str().unwrap(), "--graph", g.to_str().unwrap(), "--weights", d.to_str().unwrap()]);
    assert_eq!(stdout(&o), r#"{"value":"11"}"#);
    let c = f.write("c.json", r#"{"ring":"poly","n":2,"entries":[["1",["0","1"]],[["0","1"],"1"]]}"#);
    let k2 = f.write("k2.txt", "v 2\ne 0 1\n");
    let o = run(&["eval", "--matrix", c.to_str().unwrap(), "--graph", k2.to_str().unwrap()]);
    assert_eq!(stdout(&o), r#"{"value":["2","2"]}"#);
}

#[test]
fn invariant_independent_sets_on_p3() {
    let f = Files::new();
    let g = f.write("p3.txt", P3);
    let o = run(&["invariant", "--name", "independent-sets", "--graph", g.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), r#"{"z":"5","oracle":"5","agree":true}"#);
    let o = run(&["invariant", "--name", "potts", "--graph", g.to_str().unwrap(), "--params", "3,-1/2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], true);
}

#[test]
fn connection_report() {
    let f = Files::new();
    let m = f.write("i.json", INDEP);
    let o = run(&["connection", "--matrix", m.to_str().unwrap(), "--k", "1", "--max-vertices", "2", "--max-edges", "1"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k"], 1);
    assert_eq!(v["psd"], true);
    assert_eq!(v["bound"], "2");
    assert_eq!(v["rank_within_bound"], true);
    assert_eq!(v["basis"].as_array().unwrap().len(), v["entries"].as_array().unwrap().len());
}

#[test]
fn exit_codes_and_error_json() {
    let f = Files::new();
    let bad = f.write("bad.txt", "v 2\ne 0 5\n");
    let m = f.write("i.json", INDEP);
    let o = run(&["eval", "--matrix", m.to_str().unwrap(), "--graph", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr_json(&o)["error"], "Parse");

    let o = run(&["eval", "--matrix", "/nonexistent.json", "--graph", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr_json(&o)["message"].is_string());

    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr_json(&o)["error"], "Usage");

    let o = run(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));

    // Budget from the environment.
    let g = f.write("k5.txt", "v 5\ne 0 1\n");
    let o = bin()
        .args(["eval", "--matrix", m.to_str().unwrap(), "--graph", g.to_str().unwrap()])
        .env("PARTFUN_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr_json(&o)["error"], "BudgetExceeded");
}

#[test]
fn verify_all_at_four_vertices_passes() {
    let o = run(&["verify", "--suite", "all", "--max-vertices", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let suites: std::collections::BTreeSet<&str> =
        v["properties"].as_array().unwrap().iter().map(|p| p["suite"].as_str().unwrap()).collect();
    for s in ["moebius", "tutte", "flows", "reductions", "connection"] {
        assert!(suites.contains(s));
    }
}

fn graph_file() -> impl Strategy<Value = GraphFile> {
    (1usize..=5).prop_flat_map(|n| {
        (
            prop::collection::vec((0..n, 0..n, 1usize..=3), 0..=6),
            prop::collection::vec(prop::option::of(0usize..4), n),
            prop::collection::vec(0..n, 0..=2),
        )
            .prop_map(move |(edges, pins, labels)| {
                let mut g = Multigraph::new(n);
                for (u, v, m) in edges {
                    g.add_edges(u, v, m).unwrap();
                }
                let mut phi = Pinning::new();
                for (v, s) in pins.into_iter().enumerate() {
                    if let Some(s) = s {
                        phi.pin(v, s);
                    }
                }
                let mut labels = labels;
                labels.sort_unstable();
                labels.dedup();
                GraphFile {
                    graph: g,
                    pinning: phi,
                    labels,
                }
            })
    })
}

fn weight_matrix() -> impl Strategy<Value = WeightMatrix> {
    (1usize..=3, 0usize..3).prop_flat_map(|(n, ring)| {
        prop::collection::vec((-5i64..=5, 1i64..=4, -3i64..=3), n * n).prop_map(move |v| {
            let m = Matrix::new(n, n, v.clone()).unwrap();
            match ring {
                0 => WeightMatrix::from_matrix(m.map(|&(p, _, _)| num_bigint::BigInt::from(p))),
                1 => WeightMatrix::from_matrix(m.map(|&(p, q, _)| num_rational::BigRational::new(p.into(), q.into()))),
                _ => WeightMatrix::from_matrix(m.map(|&(p, _, c)| Poly::from_integers([p, c]))),
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph_round_trip(file in graph_file()) {
        prop_assert_eq!(text::parse(&text::to_text(&file)).unwrap(), file.clone());
        let json = text::to_json(&file).to_string();
        prop_assert_eq!(text::parse(&json).unwrap(), file);
    }

    #[test]
    fn matrix_round_trip(a in weight_matrix()) {
        let s = a.to_json().to_string();
        let back = WeightMatrix::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }
}
