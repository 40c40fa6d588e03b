use std::path::PathBuf;
use std::process::{Command, Output};

fn spectop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectop"))
        .args(args)
        .output()
        .expect("run spectop")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("spectop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const CHAIN: &str = r#"{"elements":["0","x","1"],"leq":[["0","x"],["x","1"]]}"#;
const DIAMOND: &str =
    r#"{"elements":["0","a","b","c","1"],"leq":[["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]}"#;

#[test]
fn diamond_is_not_x_top_with_a_witness() {
    let f = fixture("m3.json", DIAMOND);
    let out = spectop(&["lattice", f.to_str().unwrap(), "--x", "a,b,c"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["flags"]["x_top"], false);
    assert_eq!(v["witnesses"]["x_top"]["kind"], "variety_union");
}

#[test]
fn chain_topology_has_three_closed_sets() {
    let f = fixture("chain.json", CHAIN);
    let out = spectop(&["lattice", f.to_str().unwrap(), "--x", "0,x"]);
    let v = json(&out);
    assert_eq!(v["flags"]["x_top"], true);
    assert_eq!(v["topologies"]["x_top"]["closed_sets"].as_array().unwrap().len(), 3);
}

#[test]
fn lattice_exit_codes() {
    let chain = fixture("chain2.json", CHAIN);
    let chain = chain.to_str().unwrap();
    assert_eq!(spectop(&["lattice", chain, "--x", "1"]).status.code(), Some(4));
    assert_eq!(spectop(&["lattice", chain]).status.code(), Some(4));
    assert_eq!(spectop(&["lattice", chain, "--x", "nope"]).status.code(), Some(4));
    let vee = fixture("vee.json", r#"{"elements":["a","b","c"],"leq":[["a","b"],["a","c"]]}"#);
    assert_eq!(spectop(&["lattice", vee.to_str().unwrap(), "--x", "a"]).status.code(), Some(3));
    let bad = fixture("bad.json", r#"{"elements":"oops"}"#);
    assert_eq!(spectop(&["lattice", bad.to_str().unwrap(), "--x", "a"]).status.code(), Some(2));
}

#[test]
fn module_examples() {
    let v = json(&spectop(&["module", "Z: 2,3,5"]));
    assert_eq!(v["flags"]["topf"], true);
    assert_eq!(v["flags"]["discrete"], true);
    assert_eq!(v["spectra"]["spec_first"].as_array().unwrap().len(), 3);

    let v = json(&spectop(&["module", "Z: 2,2"]));
    assert_eq!(v["flags"]["topf"], false);
    assert_eq!(v["flags"]["min_property"], false);

    let v = json(&spectop(&["module", "Z: 4"]));
    for flag in ["strongly_topf", "ultraconnected", "uniform"] {
        assert_eq!(v["flags"][flag], true, "{flag}");
    }
}

#[test]
fn module_exit_codes() {
    assert_eq!(spectop(&["module", "Z: 1"]).status.code(), Some(2));
    assert_eq!(spectop(&["module", "Q: 2"]).status.code(), Some(2));
    assert_eq!(spectop(&["module", "Z: 64,64"]).status.code(), Some(5));
    assert_eq!(spectop(&["module", "Z: 512,2"]).status.code(), Some(5));
    assert_eq!(spectop(&["module", "Z: 512,2", "--max-order", "1024"]).status.code(), Some(0));
}

#[test]
fn ring_examples() {
    let v = json(&spectop(&["ring", "Zmod:12"]));
    assert_eq!(v["spectra"]["points"].as_array().unwrap().len(), 2);
    assert_eq!(v["flags"]["x_top"], true);
    assert_eq!(v["flags"]["strongly_x_top"], true);

    let v = json(&spectop(&["ring", "M2F2"]));
    assert_eq!(v["spectra"]["points"], serde_json::json!(["0"]));
    assert_eq!(v["flags"]["x_top"], true);
    assert_eq!(v["parts"]["left_ideals"]["flags"]["strongly_x_top"], false);
    assert_eq!(spectop(&["ring", "Zmod:1000"]).status.code(), Some(5));
}

#[test]
fn exports() {
    let out = spectop(&["export", "--format", "dot", "Z: 2,3"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("[label=").count(), 2);
    assert!(!dot.contains("->"));

    let chain = fixture("chain3.json", CHAIN);
    let out = spectop(&["export", "--format", "dot", chain.to_str().unwrap()]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("->").count(), 2);

    let out = spectop(&["export", "--format", "json", chain.to_str().unwrap(), "--x", "0,x"]);
    assert_eq!(json(&out)["closed_sets"].as_array().unwrap().len(), 3);

    assert_eq!(spectop(&["export", "--format", "svg", "Z: 2,3"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_stable() {
    let a = spectop(&["module", "Z: 8,3"]).stdout;
    let b = spectop(&["module", "Z: 8,3"]).stdout;
    assert_eq!(a, b);
    let a = spectop(&["export", "--format", "json", "Z: 4,9"]).stdout;
    let b = spectop(&["export", "--format", "json", "Z: 4,9"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn table_output() {
    let out = spectop(&["module", "Z: 2,2", "--table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("input: Z: 2,2"));
    assert!(text.contains("witness topf"));
}

#[test]
fn suite_with_another_seed_passes() {
    let out = spectop(&["suite", "--seed", "42", "--table"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("suite passed\n"));
}
