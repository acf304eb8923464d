use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn coprime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coprime")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn z6_dot_matches_golden() {
    let out = coprime(&["graph", "Z(6)", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = std::fs::read_to_string(fixture("z6.dot")).unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn graph_json_and_reduced() {
    let out = coprime(&["graph", "Z(6)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    let out = coprime(&["graph", "S(8)", "--reduced", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn classify_s3_x_z5() {
    let out = coprime(&["classify", "S(3)xZ(5)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = json(&out);
    assert_eq!(v["flags"]["at_free"]["detector"], true);
    assert_eq!(v["flags"]["cograph"]["detector"], false);
    assert_eq!(v["failed"], false);
}

#[test]
fn classify_z30_reports_a_p4() {
    let out = coprime(&["classify", "Z(30)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("P4"), "{}", stdout(&out));
}

#[test]
fn classify_s3_exits_one_on_the_k14_disagreement() {
    let out = coprime(&["classify", "S(3)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["agreements"]["k14_free"], false);
}

#[test]
fn verify_families() {
    let out = coprime(&["verify", "--families", "cyclic", "--max-order", "200", "--theorems", "3.2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = json(&out);
    assert_eq!(v["summary"][0]["checked"], 200);
    let out = coprime(&["verify", "--families", "symmetric", "--max-n", "8", "--theorems", "4.3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = coprime(&["verify", "--families", "dihedral", "--max-order", "12", "--theorems", "3.3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn embed_p3() {
    let p3 = fixture("p3.txt");
    let out = coprime(&["embed", p3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(json(&out)["k"], "210");
    let out = coprime(&["embed", "--literal", p3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn embed_reads_dot() {
    let out = coprime(&["embed", fixture("z6.dot").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(coprime(&["classify", "Q(7)"]).status.code(), Some(2));
    assert_eq!(coprime(&["classify", "D(7)"]).status.code(), Some(2));
    let table = fixture("loop5.json");
    assert_eq!(coprime(&["classify", "--table", table.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(coprime(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(coprime(&["graph", "S(8)", "--order-cap", "100"]).status.code(), Some(2));
}
