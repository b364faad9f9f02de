mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use common::*;
use eqdecomp::cli::print_graph;
use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_eqdecomp"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("eqdecomp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| match x {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect()
}

/// Text lines that every JSON item must produce, in order.
fn expected_lines(item: &Value) -> Vec<String> {
    let mut out = Vec::new();
    match item["kind"].as_str().unwrap() {
        "matrix" => {
            for row in item["rows"].as_array().unwrap() {
                out.push(format!("[{}]", strs(row).join(", ")));
            }
        }
        "poly" => out.push(format!("coefficients: [{}]", strs(&item["coefficients"]).join(", "))),
        "bipoly" => {
            for term in item["terms"].as_array().unwrap() {
                out.push(format!(
                    "{} {} {}",
                    term["u"],
                    term["t"],
                    term["coefficient"].as_str().unwrap()
                ));
            }
        }
        "partition" => {
            let reps = strs(&item["representatives"]);
            for (cell, rep) in item["cells"].as_array().unwrap().iter().zip(reps) {
                out.push(format!("{{{}}} rep {rep}", strs(cell).join(", ")));
            }
        }
        "value" => out.push(format!(
            "{}: {}",
            item["name"].as_str().unwrap(),
            item["value"].as_str().unwrap()
        )),
        other => panic!("unknown item kind {other}"),
    }
    out
}

fn assert_same_content(args: &[&str]) {
    let text = run(args);
    let mut json_args = vec!["--json"];
    json_args.extend_from_slice(args);
    let json = run(&json_args);
    assert_eq!(text.code, json.code);
    let doc: Value = serde_json::from_str(&json.stdout).unwrap();

    let lines: Vec<&str> = text.stdout.lines().map(str::trim).collect();
    let mut cursor = 0;
    let items = doc["input"].as_array().unwrap().iter().chain(doc["items"].as_array().unwrap());
    for item in items {
        for want in expected_lines(item) {
            let found = lines[cursor..].iter().position(|l| *l == want);
            let found = found.unwrap_or_else(|| panic!("{args:?}: `{want}` missing from text output"));
            cursor += found + 1;
        }
    }
    for v in doc["verdicts"].as_array().unwrap() {
        let name = v["name"].as_str().unwrap();
        let want = if v["passed"].as_bool().unwrap() {
            format!("PASS {name}")
        } else {
            format!("FAIL {name}")
        };
        assert!(lines.iter().any(|l| l.starts_with(&want)), "{args:?}: `{want}` missing");
    }
}

#[test]
fn factor_c4_prints_both_factors() {
    let r = run(&["factor", &data("c4.graph"), &data("c4.part")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("quotient factor: x^2 - 2x"));
    assert!(r.stdout.contains("deletion factor: x^2 + 2x"));
    assert!(r.stdout.contains("characteristic polynomial: x^4 - 4x^2"));
    assert!(r.stdout.contains("PASS quotient factor times deletion factor equals"));
    assert!(!r.stdout.contains("FAIL"));
}

#[test]
fn refine_petersen_from_one_vertex_gives_distance_partition() {
    let r = run(&["refine", &data("petersen.graph"), "--seed", "singleton:1"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("coarsest equitable partition:\n  {1} rep 1\n  {3, 4, 6} rep 3\n  {2, 5, 7, 8, 9, 10} rep 2\n"));
    assert!(r.stdout.contains("[0, 3, 0]\n  [1, 0, 2]\n  [0, 1, 2]"));
}

#[test]
fn explicit_representatives_change_only_the_deletion_matrix() {
    let a = run(&["delete", &data("c4.graph"), &data("c4.part")]);
    let b = run(&["delete", &data("c4.graph"), &data("c4.part"), "--reps", "2,4"]);
    let c = run(&["delete", &data("c4.graph"), &data("c4_reps.part")]);
    assert_eq!((a.code, b.code, c.code), (0, 0, 0));
    assert!(b.stdout.contains("{1, 2} rep 2\n"));
    assert!(b.stdout.contains("{3, 4} rep 4\n"));
    let strip = |s: &str| s.lines().filter(|l| !l.starts_with("elapsed_ms")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&b.stdout), strip(&c.stdout));

    let f = run(&["factor", &data("c4.graph"), &data("c4.part"), "--reps", "2,4"]);
    assert!(f.stdout.contains("deletion factor: x^2 + 2x"));

    let bad = run(&["factor", &data("c4.graph"), &data("c4.part"), "--reps", "3,4"]);
    assert_eq!(bad.code, 2);
}

#[test]
fn json_and_text_carry_the_same_values() {
    assert_same_content(&["factor", &data("c4.graph"), &data("c4.part")]);
    assert_same_content(&["delete", &data("digraph5.graph"), &data("digraph5.part")]);
    assert_same_content(&["quotient", &data("petersen.graph"), &data("petersen_halves.part")]);
    assert_same_content(&["laplacian", &data("c4.graph"), &data("c4.part"), "--signless"]);
    assert_same_content(&["zeta", &data("c4.graph")]);
    assert_same_content(&["zeta-factor", &data("petersen.graph")]);
    assert_same_content(&["refine", &data("petersen.graph"), "--seed", "singleton:1"]);
    assert_same_content(&["join", &data("k2.graph"), &data("c4.graph"), &data("k1.graph")]);
    assert_same_content(&["verify", &data("p3.graph"), &data("p3.part")]);
}

#[test]
fn json_output_is_one_document() {
    let r = run(&["--json", "zeta", &data("c4.graph")]);
    assert_eq!(r.code, 0);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["command"], "zeta");
    assert!(doc["elapsed_ms"].is_number());
    assert!(doc["verdicts"].as_array().unwrap().iter().all(|v| v["passed"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", &data("c4.graph"), &data("c4.part")]).code, 0);

    let bad = scratch("p3_bad.part", "1 2\n3\n");
    let fail = run(&["verify", &data("p3.graph"), bad.to_str().unwrap()]);
    assert_eq!(fail.code, 1);
    assert!(fail.stdout.contains("FAIL partition is equitable"));

    let usage = run(&["frobnicate"]);
    assert_eq!(usage.code, 2);
    assert!(!usage.stderr.is_empty());

    let missing = run(&["factor", "/nonexistent/x.graph"]);
    assert_eq!(missing.code, 2);

    let garbled = scratch("garbled.graph", "graph 3 undirected\n1 2\n2 x\n");
    let parse = run(&["factor", garbled.to_str().unwrap()]);
    assert_eq!(parse.code, 2);
    assert!(parse.stderr.contains("line 3"), "{}", parse.stderr);

    let directed = run(&["zeta", &data("digraph5.graph")]);
    assert_eq!(directed.code, 2);
    let disconnected = run(&["zeta", &data("2k1.graph")]);
    assert_eq!(disconnected.code, 2);
}

#[test]
fn verify_passes_on_auto_refined_random_graphs() {
    let mut r = rng(41);
    for i in 0..6 {
        let g = random_connected(&mut r, 5 + i, 0.3);
        let path = scratch(&format!("random{i}.graph"), &print_graph(&g));
        let out = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{}\n{}", out.stdout, out.stderr);
        assert!(out.stdout.contains("PASS s1^(m-n) · quotient · deletion equals Z^-1"));
        assert!(!out.stdout.contains("FAIL"));
    }
}

#[test]
fn teranishi_with_automatic_partitions() {
    let r = run(&[
        "teranishi",
        &data("k2.graph"),
        &data("p3.graph"),
        &data("c4.graph"),
        "--parts",
        "auto",
    ]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(!r.stdout.contains("FAIL"));
}
