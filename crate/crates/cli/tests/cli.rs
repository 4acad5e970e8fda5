use std::path::Path;
use std::process::{Command, Output};

use regbound::io::read_graph_auto;
use regbound::search::certificate;

fn regbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regbound"))
        .args(args)
        .env_remove("REGBOUND_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn known_v_at_lambda_one() {
    let o = regbound(&["bounds", "known-v", "--k", "11", "--lambda", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "24");
}

#[test]
fn lower_bound_graph_with_certificate() {
    let o = regbound(&["--json", "construct", "lower-bound-graph", "--lambda", "2", "--a", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 16);
    assert_eq!(v["certificate"]["evidence"]["degree"], 6);
    assert_eq!(v["certificate"]["verified"], true);
}

#[test]
fn edgeless_spectrum_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "e.txt", "4 0\n");
    let o = regbound(&["--json", "spectrum", &f]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let groups = v["eigenvalues"].as_array().unwrap();
    assert_eq!(groups.len(), 1);
    assert_eq!(groups[0]["value"], 0.0);
    assert_eq!(groups[0]["multiplicity"], 4);
}

#[test]
fn emitted_graphs_reingest_isomorphically() {
    let dir = tempfile::tempdir().unwrap();
    for to in ["edgelist", "json", "graph6"] {
        let out = dir.path().join(format!("k.{to}"));
        let o = regbound(&[
            "construct", "complete-multipartite", "--parts", "2,3,4", "--to", to, "-o",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{to}");
        let g = read_graph_auto(&std::fs::read_to_string(&out).unwrap()).unwrap();
        let want = regbound::graph::complete_multipartite(&[2, 3, 4]).unwrap();
        assert_eq!(certificate(&g).unwrap(), certificate(&want).unwrap(), "{to}");

        let o = regbound(&["construct", "complement", out.to_str().unwrap(), "--to", "graph6"]);
        let back = read_graph_auto(&stdout(&o)).unwrap();
        assert_eq!(certificate(&back).unwrap(), certificate(&want.complement()).unwrap());
    }
}

#[test]
fn hoffman_commands() {
    let dir = tempfile::tempdir().unwrap();
    // q(K2): two adjacent slims and a fat vertex on both
    let f = write(dir.path(), "h.json", r#"{"order":3,"edges":[[0,1],[0,2],[1,2]],"fat":[2]}"#);
    let o = regbound(&["--json", "hoffman", "lambda-min", &f]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["lambda_min"].as_f64().unwrap() + 1.0).abs() < 1e-9);

    let o = regbound(&["--json", "hoffman", "special-matrix", &f]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["special_matrix"], serde_json::json!([[-1.0, 0.0], [0.0, -1.0]]));

    let o = regbound(&["--json", "hoffman", "fatten", &f, "--p", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 21);
}

#[test]
fn associate_recovers_the_fat_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "h.json", r#"{"order":3,"edges":[[0,1],[0,2],[1,2]],"fat":[2]}"#);
    let g = dir.path().join("g.txt");
    let o = regbound(&["hoffman", "fatten", &f, "--p", "9", "-o", g.to_str().unwrap()]);
    assert!(o.status.success());
    let o = regbound(&["--json", "associate", g.to_str().unwrap(), "--m", "2", "--n", "9"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["partition"]["classes"].as_array().unwrap().len(), 1);
    assert_eq!(v["hoffman"]["fat"].as_array().unwrap().len(), 1);
}

#[test]
fn search_text_and_json() {
    let o = regbound(&["--json", "search", "--k", "2", "--lambda", "0", "--n-max", "8"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact_v"], 4);
    let o = regbound(&["search", "--k", "3", "--lambda", "-1/2", "--n-max", "8", "--no-prune"]);
    assert!(stdout(&o).contains("v(3, -1/2) = 4"));
}

#[test]
fn search_beyond_the_cap_exits_3() {
    let o = regbound(&["search", "--k", "2", "--lambda", "0", "--n-max", "17"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(regbound(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(regbound(&["spectrum", "/definitely/not/here"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "3 1\n0 7\n");
    let o = regbound(&["spectrum", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn verify_suites() {
    let o = regbound(&["--json", "verify", "--suite", "bounds"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|c| c["verified"] == true && c["claim"].is_string()));

    // the off-by-one identity is reported and fails the hoffman suite
    let o = regbound(&["verify", "--suite", "hoffman"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("universal_fat_identity_as_stated         FAIL"));
}

#[test]
fn verify_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_regbound"))
            .args(["--json", "verify", "--suite", "all"])
            .env("REGBOUND_THREADS", threads)
            .output()
            .unwrap();
        stdout(&o)
    };
    assert_eq!(run("1"), run("4"));
}
