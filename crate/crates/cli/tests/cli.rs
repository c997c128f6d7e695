use std::process::{Command, Output};

use durfee_core::cfinite::QuasiPolynomial;
use durfee_core::codec::parse_bfile;
use durfee_core::polyring::IntPolynomial;
use num_bigint::BigInt;
use serde_json::Value;

fn durfee(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_durfee"))
        .args(args)
        .env_remove("DURFEE_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = durfee(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    durfee(args).status.code().expect("exited normally")
}

#[test]
fn ad_as_bfile() {
    let text = stdout(&["ad", "--d", "3", "--order", "10", "--format", "bfile"]);
    assert!(text.starts_with("0 1\n1 3\n"));
    assert!(text.ends_with("10 20\n"));
    let (offset, values) = parse_bfile(&text).unwrap();
    assert_eq!(offset, 0);
    assert_eq!(values.len(), 11);
}

#[test]
fn ad_text() {
    assert_eq!(stdout(&["ad", "--d", "1", "--order", "3"]), "1 1 1 1\n");
    assert_eq!(stdout(&["ad", "--d", "0", "--order", "2"]), "1 0 0\n");
}

#[test]
fn polynomials_as_json() {
    let v: Value = serde_json::from_str(&stdout(&["phi", "--k", "2", "--format", "json"])).unwrap();
    let phi: IntPolynomial = serde_json::from_value(v["poly"].clone()).unwrap();
    assert_eq!(phi, IntPolynomial::from_i64s(&[1, 2, 1, 1, -1]));

    let v: Value = serde_json::from_str(&stdout(&["alpha", "--d", "2", "--format", "json"])).unwrap();
    assert_eq!(v["poly"]["coeffs"], serde_json::json!(["1", "1", "-1"]));
    assert_eq!(v["report"]["value_at_1"], "1");

    let v: Value = serde_json::from_str(&stdout(&["phi", "--k", "6", "--format", "json"])).unwrap();
    assert_eq!(v["report"]["value_at_1"], "64");
    assert_eq!(v["report"]["degree"], 36);
}

#[test]
fn rk_sequences() {
    assert_eq!(stdout(&["rk", "--k", "1", "--n-max", "5"]), "0 1 2 2 2 2\n");
    assert_eq!(stdout(&["rk", "--k", "3", "--n-max", "6"]), "0 0 0 0 0 0 1\n");
    let last = stdout(&["rk", "--k", "2", "--n-max", "13"]);
    assert_eq!(last.split_whitespace().last(), Some("21"));
    let bfile = stdout(&["rk", "--k", "2", "--n-max", "13", "--format", "bfile", "--offset", "3"]);
    let (offset, values) = parse_bfile(&bfile).unwrap();
    assert_eq!(offset, 3);
    assert_eq!(values.first(), Some(&BigInt::from(1)));
    assert_eq!(values.len(), 11);
}

#[test]
fn quasipolynomials() {
    let text = stdout(&["quasipoly", "--k", "3"]);
    assert!(text.contains("6m^2 - 15m + 7"));
    assert!(text.contains("6m^2 - 11m + 2"));
    assert!(text.contains("6m^2 - 7m - 1"));

    let one: QuasiPolynomial = serde_json::from_str(&stdout(&["quasipoly", "--k", "1", "--format", "json"])).unwrap();
    assert_eq!(one.period, 1);
    assert_eq!(one.eval(7), num_rational::BigRational::from_integer(2.into()));

    let json = stdout(&["quasipoly", "--k", "4", "--format", "json"]);
    let four: QuasiPolynomial = serde_json::from_str(&json).unwrap();
    assert_eq!(four.period, 12);
    assert_eq!(four.degree(), 3);
    for nu in 0..12 {
        assert_eq!(four.coeffs_in_n(nu)[3], num_rational::BigRational::new(1.into(), 9.into()));
    }
    // emitted JSON is canonical
    assert_eq!(format!("{}\n", serde_json::to_string(&four).unwrap()), json);
}

#[test]
fn periods() {
    assert_eq!(stdout(&["period", "--k", "5", "--modulus", "2"]).lines().next(), Some("8"));
    let p: usize = stdout(&["period", "--k", "3", "--modulus", "5"]).lines().next().unwrap().parse().unwrap();
    assert_eq!(15 % p, 0);
    let v: Value = serde_json::from_str(&stdout(&["period", "--k", "4", "--modulus", "2", "--format", "json"])).unwrap();
    assert_eq!(v["period"], 8);
}

#[test]
fn verify_small_battery() {
    let text = stdout(&["verify", "--k-max", "4", "--d-max", "4"]);
    assert!(text.contains("conjectural (reported only)"));
    assert!(text.ends_with("0 hard failure(s)\n"));
    assert!(!text.contains("FAIL"));
    let v: Value = serde_json::from_str(&stdout(&["verify", "--k-max", "3", "--d-max", "3", "--format", "json"])).unwrap();
    assert_eq!(v["ok"], true);
    assert!(!v["conjectural"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["phi", "--k", "0"]), 2);
    assert_eq!(code(&["period", "--k", "3", "--modulus", "1"]), 2);
    assert_eq!(code(&["quasipoly", "--k", "3", "--format", "bfile"]), 2);
    assert_eq!(code(&["rk", "--k", "3"]), 2);
    assert_eq!(code(&["verify", "--k-max", "0"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["rk", "--k", "5", "--n-max", "80", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn output_file_in_env_directory() {
    let dir = std::env::temp_dir().join(format!("durfee-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_durfee"))
        .args(["ad", "--d", "2", "--order", "4", "--format", "bfile", "--output", "a2.txt"])
        .env("DURFEE_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(dir.join("a2.txt")).unwrap();
    assert_eq!(text, "0 1\n1 2\n2 2\n3 3\n4 3\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
