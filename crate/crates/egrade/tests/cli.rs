//! End-to-end checks of the `egrade` binary: golden tables, exit codes,
//! and the text contract of each subcommand.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_egrade"))
        .args(args)
        .output()
        .expect("binary should launch")
}

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_str().unwrap().to_owned()
}

fn golden(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/golden");
    path.push(name);
    std::fs::read_to_string(path).expect("golden file should exist")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout should be utf-8")
}

#[test]
fn classify_tables_match_the_golden_files() {
    for kind in ["E6", "E7", "E8"] {
        let lower = kind.to_lowercase();
        let md = run(&["classify", kind]);
        assert_eq!(md.status.code(), Some(0));
        assert_eq!(stdout_of(&md), golden(&format!("classify_{lower}.md")));

        let json = run(&["classify", kind, "--format", "json"]);
        assert_eq!(json.status.code(), Some(0));
        assert_eq!(stdout_of(&json), golden(&format!("classify_{lower}.json")));
    }
}

#[test]
fn weyl_tables_match_the_golden_files() {
    for kind in ["E6", "E7", "E8"] {
        let lower = kind.to_lowercase();
        let md = run(&["weyl", kind]);
        assert_eq!(md.status.code(), Some(0));
        assert_eq!(stdout_of(&md), golden(&format!("weyl_{lower}.md")));

        let json = run(&["weyl", kind, "--format", "json"]);
        assert_eq!(json.status.code(), Some(0));
        assert_eq!(stdout_of(&json), golden(&format!("weyl_{lower}.json")));
    }
}

#[test]
fn unknown_kind_is_a_usage_error() {
    let output = run(&["classify", "X"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_accepts_a_classified_grading() {
    let output = run(&["verify", &fixture("e7_depth1.json")]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("specialness: PASS"));
    assert!(text.contains("bracket axiom: PASS"));
    assert!(text.contains("1 Cartan component"));
    assert!(text.contains("type: (66,30,0,0,0,0,1)"));
    assert!(text.ends_with("verdict: PASS\n"));
}

#[test]
fn verify_rejects_a_subspace_containing_a_root_class() {
    let output = run(&["verify", &fixture("root_class.json")]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert!(text.contains("specialness: FAIL"));
    assert!(text.ends_with("verdict: FAIL\n"));
}

#[test]
fn verify_rejects_malformed_json() {
    let output = run(&["verify", &fixture("malformed.json")]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn identical_documents_are_isomorphic() {
    let doc = fixture("e6_depth2.json");
    let output = run(&["isomorphic", &doc, &doc]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output), "ISO\n");
}

#[test]
fn a_retargeting_that_moves_the_cartan_degree_is_not_isomorphic() {
    let output = run(&[
        "isomorphic",
        &fixture("e6_depth2.json"),
        &fixture("e6_depth2_twist.json"),
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert_eq!(
        stdout_of(&output),
        "NONISO (first differing invariant: cartan subgroup)\n"
    );
}

#[test]
fn the_orbit_oracle_agrees_with_the_invariant_verdict() {
    let output = run(&[
        "isomorphic",
        &fixture("e6_depth2.json"),
        &fixture("e6_depth2_twist.json"),
        "--oracle",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert!(text.contains("NONISO"));
    assert!(text.contains("oracle: agrees"));
}

#[test]
fn gradings_over_different_targets_are_rejected() {
    let output = run(&[
        "isomorphic",
        &fixture("e6_depth2.json"),
        &fixture("e8_depth0.json"),
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verification_works_single_threaded() {
    let output = Command::new(env!("CARGO_BIN_EXE_egrade"))
        .args(["verify", &fixture("e7_depth1.json")])
        .env("EGRADE_THREADS", "1")
        .output()
        .expect("binary should launch");
    assert_eq!(output.status.code(), Some(0));
}
