use std::process::Command;

use fockjack::cli::run;
use fockjack::jack::jack;
use fockjack::partitions::Partition;
use fockjack::scalars::KappaFunction;
use fockjack::symfun::SymPoly;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("fockjack").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn kac_json_matches_expected_bytes() {
    let (code, out, _) = call(&["kac", "--pp", "2", "--pm", "5", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"classes\":[{\"rs\":[1,1],\"delta\":\"0\"},{\"rs\":[1,2],\"delta\":\"-1/5\"}]}\n"
    );
}

#[test]
fn census_count() {
    assert_eq!(
        call(&["census", "--pp", "2", "--pm", "3", "--count-only"]),
        (0, "13\n".into(), String::new())
    );
}

#[test]
fn jack_json_round_trips() {
    let (code, out, _) = call(&["jack", "--deg", "2", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let pairs = v.as_array().unwrap();
    assert_eq!(pairs.len(), 2);
    for p in pairs {
        let lambda = Partition::from_json(&p["lambda"]).unwrap();
        let expect = jack(&lambda, &KappaFunction::kappa()).unwrap();
        let parsed = SymPoly::from_json_with(&p["P"], KappaFunction::from_json).unwrap();
        assert_eq!(parsed, expect.p);
        assert_eq!(KappaFunction::from_json(&p["b"]).unwrap(), expect.b);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["kac", "--pp", "2"][..],
        &["kac", "--pp", "2", "--pm", "4"],
        &["frobnicate"],
        &["jack", "--deg", "2", "--kappa", "x/y"],
        &["omega", "--pp", "2", "--pm", "3", "--n", "7"],
        &["kac", "--pp", "2", "--pm", "3", "--json", "--text"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["gpoly", "--pp", "2", "--pm", "5", "--json"];
    assert_eq!(call(&args), call(&args));
}

#[test]
fn certificate_output() {
    let (code, out, _) = call(&[
        "structconst",
        "--pp",
        "2",
        "--pm",
        "3",
        "--kind",
        "a",
        "--n",
        "1",
        "--k",
        "-1",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "45");
    assert_eq!(v["certificates"][0]["pass"], true);
}

#[test]
fn single_route_structure_constant_has_no_certificate() {
    let (code, out, _) = call(&[
        "structconst",
        "--pp",
        "2",
        "--pm",
        "3",
        "--kind",
        "a",
        "--n",
        "0",
        "--k",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("beyond the size guard"));
}

#[test]
fn binary_verify_all_keeps_stdout_clean() {
    let out = Command::new(env!("CARGO_BIN_EXE_fockjack"))
        .args(["verify-all", "--pp", "2", "--pm", "3", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], v["total"]);
    assert!(!out.stderr.is_empty());
}
