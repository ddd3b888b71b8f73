use std::path::PathBuf;
use std::process::{Command, Output};

use lspaths::poset::{isomorphic, PosetJson};
use lspaths::{fixtures, BondedPoset};
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lspath")).args(args).output().expect("spawn lspath")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_kind(out: &Output) -> String {
    json(out)["error"]["kind"].as_str().unwrap_or_default().to_string()
}

#[test]
fn paths_enum_counts() {
    let out = run(&["paths-enum", "--poset", &fixture("i24.json"), "--degree", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["count"], 20);
    assert_eq!(v["paths"].as_array().unwrap().len(), 20);
}

#[test]
fn poset_check_reports_gcd_failure() {
    let out = run(&["poset-check", "--poset", &fixture("bad-diamond.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "gcd-condition");

    let ok = run(&["poset-check", "--poset", &fixture("bonded-diamond.json")]);
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stdout));
}

#[test]
fn schubert_emits_the_i24_poset() {
    let file = std::env::temp_dir().join(format!("lspath-a3-{}.json", std::process::id()));
    let out = run(&["schubert", "--type", "A3", "--weight", "0,1,0", "--emit", file.to_str().unwrap()]);
    assert!(out.status.success());
    let raw: PosetJson = serde_json::from_value(json(&out)["poset"].clone()).unwrap();
    assert!(isomorphic(&BondedPoset::from_json(&raw).unwrap(), &fixtures::i24()));

    let checked = run(&["poset-check", "--poset", file.to_str().unwrap()]);
    let _ = std::fs::remove_file(&file);
    assert!(checked.status.success());
}

#[test]
fn output_is_deterministic() {
    let args = ["complex-levels", "--poset", &fixture("chain-121.json"), "--degree", "3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn chain_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lspath"))
        .args(["paths-enum", "--poset", &fixture("i24.json"), "--degree", "1"])
        .env("LSPATH_MAX_CHAINS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "too-many-chains");
}

#[test]
fn parse_errors_are_json() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "parse");

    let help = run(&["--help"]);
    assert!(help.status.success());
}

#[test]
fn order_compare() {
    let out = run(&["order-compare", "--poset", &fixture("i24.json"), "--v", "14:1", "--w", "23:1"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["triangle"], "INCOMPARABLE");
}

#[test]
fn grassmann_commands() {
    let out = run(&["grassmann", "straighten", "--d", "2", "--n", "4", "--monomial", "14,23"]);
    assert!(out.status.success());
    let terms = json(&out)["element"]["terms"].as_array().unwrap().clone();
    assert_eq!(terms.len(), 2);

    let out = run(&[
        "grassmann", "valuation", "--d", "2", "--n", "4", "--element", "14,23", "--chain", "12,13,14,24,34",
    ]);
    let v = json(&out);
    assert_eq!(v["value"]["values"]["13"], "1/1");
    assert_eq!(v["value"]["values"]["24"], "1/1");

    let out = run(&["grassmann", "verify", "--d", "2", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn acceptance_quick() {
    let out = run(&["acceptance", "--quick"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));

    let bad = run(&["acceptance", "--only", "3", "--corrupt-table"]);
    assert_eq!(bad.status.code(), Some(1));
}
