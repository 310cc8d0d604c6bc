use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use zhou_core::{CayleyTable, Limits, Registry, RingTable};

fn zhou(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zhou")).args(args).output().expect("run zhou")
}

fn code(args: &[&str]) -> i32 {
    zhou(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(zhou(args).stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("zhou-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["eval", "Z4"], 0),
        (&["delta", "Z16"], 0),
        (&["check", "reduced", "Z5"], 0),
        (&["check", "reduced", "Z4"], 1),
        (&["check", "zhou_right_e_reduced", "M(2,Z4)", "--e", "[[0,0],[3,1]]"], 1),
        (&["check", "zhou_right_e_reduced", "M(2,Z4)"], 2),
        (&["check", "zhou_right_e_reduced", "Z4", "--e", "0"], 2),
        (&["check", "zhou_right_e_reduced", "Z4", "--e", "0", "--allow-trivial-e"], 0),
        (&["check", "no_such_predicate", "Z4"], 2),
        (&["eval", "Z("], 2),
        (&["eval", "corner(Z4,7)"], 2),
        (&["eval", "table(\"/nonexistent/ring.toml\")"], 2),
        (&["--max-order", "8", "eval", "Z16"], 3),
        (&["eval", "M(3,Z4)"], 3),
        (&["check", "weakly_symmetric", "U(3,Z2)"], 3),
        (&["--budget", "10", "check", "symmetric", "Z8"], 3),
        (&["implication", "reduced", "semicommutative"], 0),
        (&["implication", "zhou_e_reduced", "semicommutative"], 1),
        (&["implication", "reduced", "bogus"], 2),
        (&["regress", "--filter", "maschke"], 0),
        (&["regress", "--filter", "delta.corner"], 1),
        (&["regress", "--filter", "h3.delta_formula"], 0),
        (&["regress", "--filter", "nothing.here"], 2),
    ];
    for (args, want) in cases {
        assert_eq!(code(args), *want, "{args:?}");
    }
}

#[test]
fn delta_text_and_json() {
    let text = stdout(&["delta", "Z16"]);
    assert!(text.contains("δ = {0,2,4,6,8,10,12,14}"), "{text}");
    let v = json(&["delta", "Z16"]);
    assert_eq!(v["order"], 8);
    let ideal = json(&["delta", "Z16", "--ideal", "4"]);
    assert_eq!(ideal["delta"], serde_json::json!(["0", "8"]));
    let twelve = json(&["delta", "Z12", "--ideal", "6"]);
    assert_eq!(twelve["delta"], serde_json::json!(["0", "6"]));
}

#[test]
fn check_json_witness() {
    let v = json(&["check", "zhou_right_e_reduced", "M(2,Z4)", "--e", "[[0,0],[3,1]]"]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["a"], "[[0,1],[0,0]]");
    assert_eq!(v["witness"]["ae"], "[[3,1],[0,0]]");
    assert_eq!(v["predicate"], "zhou_right_e_reduced");
}

#[test]
fn json_output_is_stable() {
    for args in [&["eval", "U(2,Z2)"][..], &["elements", "Z4"], &["radical", "U(2,Z2)"], &["regress", "--filter", "skew.armendariz"]] {
        let a = stdout(&[&["--format", "json"], args].concat());
        let b = stdout(&[&["--format", "json"], args].concat());
        assert_eq!(a, b, "{args:?}");
        serde_json::from_str::<Value>(&a).unwrap();
    }
    let e = json(&["eval", "U(2,Z2)"]);
    assert_eq!(e["order"], 8);
    assert_eq!(e["unital"], true);
    assert_eq!(e["commutative"], false);
}

#[test]
fn errors_in_json_mode() {
    let out = zhou(&["--format", "json", "eval", "Z("]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exit"], 2);
    assert!(v["error"].as_str().unwrap().contains("parse error"));
}

#[test]
fn regress_list_and_reports() {
    let list = stdout(&["regress", "--list"]);
    let ids: Vec<&str> = list.lines().collect();
    assert_eq!(ids, zhou_harness::entry_ids());
    assert!(ids.contains(&"delta.routes") && ids.contains(&"freealg.soc_delta"));

    let reports = json(&["regress", "--filter", "dorroh.delta_formula"]);
    let first = &reports.as_array().unwrap()[0];
    assert_eq!(first["id"], "dorroh.delta_formula");
    assert_eq!(first["verdict"], "divergence");

    let text = stdout(&["regress", "--filter", "delta.corner"]);
    assert!(text.starts_with("[counterexample] delta.corner"), "{text}");
}

#[test]
fn table_files_and_manifest() {
    let dir = scratch("tables");
    let l = Limits::DEFAULT;
    let reg = Registry::with_builtins(&l).unwrap();
    let u = reg.eval_str("U(2,Z2)", &l).unwrap();
    let ring_path = dir.join("u2.toml");
    RingTable::from_ring(&u, true).save(&ring_path).unwrap();
    let expr = format!("table(\"{}\")", ring_path.display());
    let v = json(&["delta", &expr]);
    assert_eq!(v["order"], 4);

    std::fs::write(dir.join("c2.toml"), CayleyTable::cyclic_group(2).render()).unwrap();
    std::fs::write(dir.join("manifest.toml"), "[cayley]\nmyc2 = \"c2.toml\"\n\n[algebras]\nu2 = \"u2.toml\"\n").unwrap();
    let manifest = dir.join("manifest.toml");
    let m = manifest.to_str().unwrap();
    assert_eq!(json(&["--manifest", m, "eval", "grpring(Z3,myc2)"])["order"], 9);
    assert_eq!(json(&["--manifest", m, "eval", "dorroh(Z2,u2)"])["order"], 16);
    let names = json(&["--manifest", m, "catalog", "--tier", "small"]);
    assert!(names["tables"].as_array().unwrap().iter().any(|t| t == "myc2"));

    std::fs::write(dir.join("bad.toml"), "order = 2\nadd = [[0,1],[1,0]]\nmul = [[0,1],[1,1]]\n").unwrap();
    let bad = format!("table(\"{}\")", dir.join("bad.toml").display());
    assert_eq!(code(&["eval", &bad]), 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn catalog_listing() {
    let v = json(&["catalog", "--tier", "small"]);
    let rings = v["rings"].as_array().unwrap();
    assert!(rings.len() > 30);
    assert!(stdout(&["catalog", "--tier", "small"]).contains("freealg16"));
}
