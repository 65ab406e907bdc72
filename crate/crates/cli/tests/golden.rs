use std::path::PathBuf;
use std::process::{Command, Output};

use gw3ca_core::conformal::Engine;

fn gw3ca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gw3ca")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = gw3ca(args);
    assert_eq!(out.status.code(), Some(0), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(p).unwrap()
}

fn check(name: &str, args: &[&str]) {
    assert_eq!(stdout(args), golden(name), "{}", name);
}

#[test]
fn ope_fixtures() {
    check("ope_gw3_L_W.txt", &["ope", "--preset", "gw3", "L", "W"]);
    check("ope_gw3_M_M.txt", &["ope", "--preset", "gw3", "M", "M"]);
    check("ope_gw3_W_LM.txt", &["ope", "--preset", "gw3", "W", "LM"]);
    check("ope_gw3_LM_V.txt", &["ope", "--preset", "gw3", "LM", "V"]);
}

#[test]
fn ope_output_parses_back_to_the_reference_brackets() {
    let e = Engine::builtin("gw3").unwrap();
    let cases = [
        ("W", "LM", "2(DW)M + 2L(DV) + 3l(WM + LV) + (4l^2D + 5/2*l^3)V"),
        ("LM", "V", "3(D + l)(MV) - 2M(DV)"),
    ];
    for (a, b, want) in cases {
        let got = stdout(&["ope", "--preset", "gw3", a, b]);
        assert_eq!(e.parse(got.trim()).unwrap(), e.parse(want).unwrap(), "[{}_l {}]", a, b);
    }
}

#[test]
fn jacobi_fixtures() {
    check("jacobi_gw3.txt", &["jacobi", "--preset", "gw3"]);
    check("jacobi_heisenberg4.txt", &["jacobi", "--preset", "heisenberg4"]);
    let nogo = stdout(&["jacobi", "--preset", "gw3_nogo"]);
    assert!(nogo.contains("W W M  nonzero (expected)"));
    assert!(nogo.trim_end().ends_with("expected_nonzero: confirmed"));
}

#[test]
fn verma_fixtures() {
    check("dn_1.txt", &["dn", "1"]);
    check("dn_2_vacuum.txt", &["dn", "2", "--hL", "0", "--hW", "0", "--hM", "0", "--hV", "0"]);
    check("det_1.json", &["det", "--level", "1", "--format", "json"]);
    check("character_verma_4.txt", &["character", "4", "--module", "verma"]);
    check("character_vacuum_5.txt", &["character", "5", "--module", "vacuum"]);
}

#[test]
fn freefield_fixtures() {
    check("weights_p1_q1.txt", &["freefield", "weights", "--p", "1", "--q", "1", "--lam", "1", "--mu", "2"]);
    check("wt1_point.txt", &["freefield", "wt1", "--lam", "1/3", "--mu", "2", "--q", "5", "--r", "2", "--s", "3"]);
    let v = stdout(&["freefield", "verify", "--preset", "gca"]);
    assert!(v.trim_end().ends_with("3/3 brackets match"), "{}", v);
}

#[test]
fn excluded_weights_are_reported() {
    // c_M = -24 at lam = 1, mu = 0, so h_M = -1, h_V = 0 sits on the excluded locus
    let out = stdout(&["freefield", "weights", "--lam", "1", "--mu", "0", "--hM", "-1", "--hV", "0"]);
    assert!(out.contains(": not parametrised"), "{}", out);
    let out = stdout(&["freefield", "weights", "--lam", "1", "--mu", "0", "--hM", "1", "--hV", "0"]);
    assert!(out.contains(": parametrised"), "{}", out);
}

#[test]
fn exit_codes() {
    assert_eq!(gw3ca(&["ope", "--preset", "gw3", "L", "X"]).status.code(), Some(1));
    assert_eq!(gw3ca(&["ope", "--preset", "nosuch", "L", "L"]).status.code(), Some(1));
    assert_eq!(gw3ca(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gw3ca(&["det", "--level", "1", "--hL", "1/"]).status.code(), Some(1));
    assert_eq!(gw3ca(&["det", "--level", "1", "--cM", "0"]).status.code(), Some(3));
    assert_eq!(gw3ca(&["freefield", "verify", "--lam", "0", "--mu", "0"]).status.code(), Some(3));
    // D_3 at h = 0 against n(n^2-1)^2(n^2-4)c_M^2/4320
    assert_eq!(gw3ca(&["dn", "3", "--hL", "0", "--hW", "0", "--hM", "0", "--hV", "0"]).status.code(), Some(2));
    assert_eq!(gw3ca(&["--help"]).status.code(), Some(0));
}

#[test]
fn seeded_certificates_are_deterministic() {
    let args = ["det", "--level", "4", "--hL", "0", "--hW", "0", "--hM", "0", "--hV", "0", "--seed", "11", "--format", "json"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["samples"], 20);
    assert_eq!(v["vanishing"], 20);
}
