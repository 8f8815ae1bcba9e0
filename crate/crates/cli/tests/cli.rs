use std::process::{Command, Output};

use serde_json::Value;

fn sixteen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sixteen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = sixteen(&all);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON");
    (v, out.status.code().expect("exit code"))
}

fn witness<'a>(v: &'a Value, name: &str) -> &'a str {
    v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["name"] == name)
        .unwrap_or_else(|| panic!("no witness {name}"))["value"]
        .as_str()
        .unwrap()
}

#[test]
fn generate_k2() {
    let (v, code) = json(&["generate", "--n", "1", "--p", "2", "--q", "1", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "verified");
    let tuple: Vec<&str> = ["m", "a", "b", "c", "d", "e", "f"].iter().map(|n| witness(&v, n)).collect();
    assert_eq!(tuple, ["5", "841", "121", "49", "62", "7", "23"]);
    assert_eq!(witness(&v, "m(a^4 - b^4)"), "2500160270400");
    assert_eq!(witness(&v, "torsion screen"), "likely infinite");
    assert_eq!(v["inputs"]["k"], "2");
}

#[test]
fn generate_rejects_zero_k_and_degenerate_params() {
    assert_eq!(sixteen(&["generate", "--n", "1", "--p", "2", "--q", "1", "--k", "0"]).status.code(), Some(64));
    let out = sixteen(&["generate", "--n", "1", "--p", "1", "--q", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("q - p"));
}

#[test]
fn generate16_witness() {
    let (v, code) = json(&["generate16", "--k", "1"]);
    assert_eq!(code, 0);
    let names = ["a", "b", "c", "d", "e", "f", "u", "v", "w", "x", "y", "z"];
    let got: Vec<&str> = names.iter().map(|n| witness(&v, n)).collect();
    assert_eq!(
        got,
        [
            "296513", "260543", "5336657", "5057584", "5815184", "2606224", "4567568", "4379152",
            "230692576", "107491712", "297569", "295391"
        ]
    );
    assert_eq!(witness(&v, "lhs"), witness(&v, "rhs"));
    assert_eq!(witness(&v, "lhs").len(), 102);
}

#[test]
fn generate16_degenerate_and_json() {
    let out = sixteen(&["generate16", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("q(k)"));

    let (v, code) = json(&["generate16", "--k", "0"]);
    assert_eq!(code, 0);
    assert!(v["witnesses"].as_array().unwrap().iter().all(|w| w["value"].is_string()));
}

#[test]
fn verify_exit_codes() {
    let (v, code) = json(&["verify", "--identity", "octic", "--mode", "numeric"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "erratum-detected");
    assert_eq!(v["errata"][0]["name"], "octic/display");
    assert!(v["errata"][0]["correction"].as_str().unwrap().contains("16"));

    assert_eq!(sixteen(&["verify", "--identity", "sectionb-link", "--mode", "symbolic"]).status.code(), Some(0));
    assert_eq!(sixteen(&["verify", "--identity", "cz16", "--mode", "symbolic"]).status.code(), Some(64));

    let out = sixteen(&["verify", "--identity", "nosuch"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ramanujan-6-10-8"));
}

#[test]
fn errata_report() {
    let (v, code) = json(&["errata"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["errata"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert!(names.len() >= 4);
    for want in ["octic/display", "sectiona-specialized", "ramanujan-6-10-8", "quartic-sum/intermediate"] {
        assert!(names.contains(&want), "{want} missing");
    }
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["verify", "--identity", "quartic-sum", "--format", "json"];
    assert_eq!(sixteen(&args).stdout, sixteen(&args).stdout);
}

#[test]
fn timing_is_a_separate_field() {
    let (v, _) = json(&["generate16", "--k", "1", "--timing"]);
    assert!(v["timing"]["elapsed_ms"].is_string());
    let (v, _) = json(&["generate16", "--k", "1"]);
    assert!(v.get("timing").is_none());
}

#[test]
fn search_and_curve() {
    let (v, code) = json(&["search", "quartic-sum", "--bound", "30"]);
    assert_eq!(code, 0);
    assert_eq!(witness(&v, "g(5, 4) = g(7, -1)"), "2101");
    assert_eq!(witness(&v, "g(15, 13) = g(23, -11)"), "194041");

    let (v, code) = json(&["curve", "--n", "1", "--p", "2", "--q", "1", "--multiples", "2"]);
    assert_eq!(code, 0);
    assert_eq!(witness(&v, "P"), "(28, -64)");
    assert_eq!(witness(&v, "2P"), "(737/16, -4335/64)");
    assert_eq!(witness(&v, "reconciliation"), "identity");
}

#[test]
fn unknown_option_is_usage_error() {
    assert_eq!(sixteen(&["generate16", "--k", "1", "--bogus"]).status.code(), Some(64));
    assert_eq!(sixteen(&["--help"]).status.code(), Some(0));
}
