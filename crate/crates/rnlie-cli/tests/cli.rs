//! End-to-end tests of the command-line interface: exit-code contract,
//! deterministic reports, and the structured-text round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rnlie"))
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_algebra_passes_on_valid_input() {
    let out = run(&["verify-algebra", &fixture("a41_rn.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("jacobi: pass"));
}

#[test]
fn verify_r_names_the_first_failing_equation() {
    let out = run(&["verify-r", &fixture("a41_base_r.json")]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify-r", &fixture("a41_bad_r.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("first failing matrix equation: i = 1"));
}

#[test]
fn verify_rn_reports_four_conditions() {
    let out = run(&["verify-rn", &fixture("a41_rn.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in ["cybe: pass", "torsion: pass", "intertwine: pass", "concomitant: pass"] {
        assert!(text.contains(line), "missing `{line}` in {text}");
    }
}

#[test]
fn dual_prints_the_sklyanin_constants() {
    let out = run(&["dual", &fixture("a41_base_r.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("f~^{12}_3 = 1"));
    assert!(text.contains("f~^{13}_4 = 1"));
}

#[test]
fn hierarchy_prints_k_members() {
    let out = run(&["hierarchy", &fixture("a41_rn.json"), "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("r_1:") && text.contains("r_3:"));
}

#[test]
fn compat_dispatches_on_content() {
    let out = run(&[
        "compat",
        &fixture("a41_base_r.json"),
        &fixture("a41_r1.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("compatibility (r-r): pass"));
}

#[test]
fn construct_n_emits_a_document() {
    let out = run(&[
        "construct-n",
        &fixture("a41_base_r.json"),
        &fixture("a41_r1.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = rnlie::document::Document::parse(&stdout(&out)).expect("valid document");
    let n = doc.n.expect("n section");
    // n(X3) = X1, n(X4) = X2.
    assert_eq!(n.matrix[0][2], "1");
    assert_eq!(n.matrix[1][3], "1");
    assert_eq!(n.matrix[0][0], "0");
}

#[test]
fn equiv_witness_mode_verifies_the_identity() {
    let out = run(&[
        "equiv",
        &fixture("a41_base_r.json"),
        &fixture("a41_base_r.json"),
        "--witness",
        &fixture("identity_witness.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn equiv_search_finds_same_class_and_rejects_sign_classes() {
    let out = run(&[
        "equiv",
        &fixture("a41_c13_pos1.json"),
        &fixture("a41_c13_pos4.json"),
        "--search",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("witness found"));

    let out = run(&[
        "equiv",
        &fixture("a41_c13_plus.json"),
        &fixture("a41_c13_minus.json"),
        "--search",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("no witness found (budget 10000)"));
}

#[test]
fn catalog_verify_is_clean_and_deterministic() {
    let a = run(&["catalog", "verify", "--seed", "1", "--samples", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("18 entries"));
    assert!(stdout(&a).contains("0 failures"));
    let b = run(&["catalog", "verify", "--seed", "1", "--samples", "1"]);
    assert_eq!(stdout(&a), stdout(&b), "same-seed runs must be byte-identical");
}

#[test]
fn catalog_show_round_trips_as_input() {
    let out = run(&["catalog", "show", "A_{4,1}"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let doc = rnlie::document::Document::parse(&text).expect("valid document");
    assert_eq!(doc.print(), text.trim_end());
    // And the emitted pair passes verify-rn.
    let tmp = std::env::temp_dir().join("rnlie_catalog_show_a41.json");
    std::fs::write(&tmp, &text).unwrap();
    let out = run(&["verify-rn", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invariants_pipeline_reports_the_example_honestly() {
    let out = run(&["invariants", &fixture("sec7.json"), "--kmax", "3"]);
    // The printed representation fails its commutation relations and the
    // three invariants are not pairwise in involution, so the pipeline
    // reports a mathematical failure.
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("realization: pass"));
    assert!(text.contains("representation: FAIL"));
    assert!(text.contains("I_1 = -x4 - x3 + 2*x2*x3"));
    assert!(text.contains("independence rank: 3"));
    assert!(text.contains("superintegrable(extra=1, maximal)"));
}

#[test]
fn json_mode_is_stable_and_structured() {
    let a = run(&["invariants", &fixture("sec7.json"), "--kmax", "2", "--json"]);
    let b = run(&["invariants", &fixture("sec7.json"), "--kmax", "2", "--json"]);
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).expect("valid JSON");
    assert_eq!(v["check"], "invariants");
    assert_eq!(v["independence_rank"], 2);
}

#[test]
fn usage_and_input_errors_exit_2() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify-r", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
    // Malformed document.
    let tmp = std::env::temp_dir().join("rnlie_bad_doc.json");
    std::fs::write(&tmp, "{\"algebra\": {\"dim\": 0}}").unwrap();
    let out = run(&["verify-algebra", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
