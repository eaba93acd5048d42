//! End-to-end runs of the `plgen` binary: exit codes, output formats, and the
//! JSON round trip of `plcheck`.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use plgen::arrangements::vanishing_ideal;
use plgen::poly::{ideal_compare, Containment, Ideal, Ring};
use plgen_cli::{parse, prepare};
use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus").join(name)
}

fn plgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plgen")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn temp_doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn true_and_false_verdicts_both_exit_zero() {
    let yes = plgen(&["plcheck", corpus("two_planes.toml").to_str().unwrap(), "--emit", "json"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(json_of(&yes)["result"]["plcheck"]["verdict"], Value::Bool(true));

    let no = plgen(&["family", "skewlines", "--r", "3", "--run", "plcheck", "--emit", "json"]);
    assert_eq!(no.status.code(), Some(0));
    let v = json_of(&no);
    assert_eq!(v["result"]["plcheck"]["verdict"], Value::Bool(false));
    assert_eq!(v["complete"], Value::Bool(true));
}

#[test]
fn input_errors_exit_two_with_a_line() {
    let doc = temp_doc("dimension = 3\n[[subspace]]\nforms = [[1, 0, 0]]\n[[subspace]]\nforms = [[1, 0]]\n");
    let out = plgen(&["ideal", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":5:") && err.contains("dimension mismatch"), "{err}");

    let out = plgen(&["ideal", "/nonexistent/file.toml"]);
    assert_eq!(out.status.code(), Some(2));
    let out = plgen(&["family", "orbit", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = plgen(&["lattice", "--order", "sideways", corpus("kozlov.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn time_limit_exits_three_with_partial_report() {
    let out = plgen(&[
        "family", "orbit", "--n", "6", "--shape", "3,2,1", "--shape", "4,1,1", "--run", "plcheck", "--time-limit", "1",
        "--emit", "json",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert_eq!(v["complete"], Value::Bool(false));
    assert!(v["error"].as_str().unwrap().contains("time limit"));
    assert_eq!(v["result"]["lattice"]["flats"], Value::from(203));
}

#[test]
fn text_output_and_family_summary() {
    let out = plgen(&["family", "orbit", "--n", "6", "--shape", "2,2,1,1", "--run", "blocker"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("blocker_shapes: [[5, 1]]"), "{text}");

    let out = plgen(&["family", "braid", "--n", "4", "--emit", "json"]);
    let v = json_of(&out);
    assert_eq!(v["command"], Value::from("family"));
    assert_eq!(v["result"]["summary"]["subspaces"], Value::from(6));
}

#[test]
fn golden_flag_compares_reports() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/kozlov.blocker.grevlex.json");
    let doc = corpus("kozlov.toml");
    let ok = plgen(&["blocker", doc.to_str().unwrap(), "--golden", golden.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));

    let other = corpus("kozlov_coordinates.toml");
    let bad = plgen(&["blocker", other.to_str().unwrap(), "--golden", golden.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("differs from golden"));
}

/// Parses the emitted product generators and compares them with a vanishing
/// ideal computed here from the document.
fn round_trip(document: &str) {
    let path = corpus(document);
    let out = plgen(&["plcheck", path.to_str().unwrap(), "--emit", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let names: Vec<String> = v["input"]["variables"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n.as_str().unwrap().to_string())
        .collect();
    let ring = Ring::new(names).unwrap();
    let generators: Vec<&str> = v["result"]["plcheck"]["product_ideal"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_str().unwrap())
        .collect();
    let product = Ideal::parse(ring, &generators).unwrap();

    let subject = prepare(&parse(&std::fs::read_to_string(&path).unwrap()).unwrap()).unwrap();
    let vanishing = vanishing_ideal(subject.embedding.arrangement()).unwrap();
    let equal = ideal_compare(&product, &vanishing).unwrap() == Containment::Equal;
    assert_eq!(Value::Bool(equal), v["result"]["plcheck"]["verdict"], "{document}");
}

#[test]
fn plcheck_json_round_trips() {
    for document in ["two_planes.toml", "kozlov.toml", "rational_rows.toml", "skew_lines.toml", "general5.toml"] {
        round_trip(document);
    }
}
