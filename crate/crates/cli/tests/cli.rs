use std::process::{Command, Output};

use motivic::{BiPoly, Series};

fn motivic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motivic")).args(args).env_remove("MOTIVIC_ORDER").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = motivic(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

/// Parses the text rendering `t^n: <poly>` back into coefficients.
fn text_coeffs(text: &str) -> Vec<BiPoly> {
    text.lines()
        .enumerate()
        .map(|(n, line)| {
            let rest = line.strip_prefix(&format!("t^{n}: ")).expect("t^n prefix");
            rest.parse().expect("re-parseable coefficient")
        })
        .collect()
}

fn polys(list: &[&str]) -> Vec<BiPoly> {
    list.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn hodge_product_of_genus_two_curve() {
    let out = stdout(&["series", "hodge-product", "--g", "2", "--r", "1", "--order", "1"]);
    assert_eq!(text_coeffs(&out), polys(&["1", "1 - 2*u - 2*v + u*v"]));
}

#[test]
fn punctual_surface_json() {
    let out = stdout(&["series", "punctual-surface", "--order", "2", "--format", "json"]);
    let s: Series = serde_json::from_str(&out).expect("series schema");
    assert_eq!(s.coeffs(), polys(&["1", "1", "1 + u*v"]).as_slice());
}

#[test]
fn zeta_of_point() {
    let out = stdout(&["series", "zeta", "--class", "point", "--order", "3", "--format", "csv"]);
    assert_eq!(out, "n,coefficient\n0,1\n1,1\n2,1\n3,1\n");
}

#[test]
fn text_matches_json() {
    for kind in ["quot-curve", "goettsche", "poincare-product", "punctual-curve"] {
        let args = ["series", kind, "--g", "1", "--r", "2", "--order", "5"];
        let text = stdout(&args);
        let json = stdout(&[&args[..], &["--format", "json"]].concat());
        let s: Series = serde_json::from_str(&json).unwrap();
        assert_eq!(text_coeffs(&text), s.coeffs(), "{kind}");
    }
}

#[test]
fn order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_motivic"))
        .args(["series", "punctual-curve", "--r", "2"])
        .env("MOTIVIC_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
    assert_eq!(stdout(&["series", "punctual-curve"]).lines().count(), 11);
}

#[test]
fn hodge_tables() {
    let p1 = stdout(&["table", "--g", "0", "--r", "1", "--nmax", "1", "--format", "csv"]);
    assert_eq!(p1, "n,p,q,h\n0,0,0,1\n1,0,0,1\n1,1,1,1\n");
    let elliptic = stdout(&["table", "--g", "1", "--r", "1", "--nmax", "1", "--format", "csv"]);
    assert_eq!(elliptic, "n,p,q,h\n0,0,0,1\n1,0,0,1\n1,0,1,1\n1,1,0,1\n1,1,1,1\n");
    // C x P^1 for a genus-2 curve C
    let product = stdout(&["table", "--g", "2", "--r", "2", "--nmax", "1", "--format", "csv"]);
    let rows: Vec<&str> = product.lines().filter(|l| l.starts_with("1,")).collect();
    assert_eq!(rows, ["1,0,0,1", "1,0,1,2", "1,1,0,2", "1,1,1,2", "1,1,2,2", "1,2,1,2", "1,2,2,1"]);
}

#[test]
fn omega_classes() {
    let curve = stdout(&["omega", "punctual-curve", "--r", "3", "--order", "4", "--format", "csv"]);
    assert_eq!(curve, "n,omega\n1,1 + u*v + u^2*v^2\n2,0\n3,0\n4,0\n");
    let surface = stdout(&["omega", "surface", "--class", "P^1*P^1", "--order", "3"]);
    assert_eq!(surface, "Omega_1: 1\nOmega_2: u*v\nOmega_3: u^2*v^2\n");
}

#[test]
fn strata_table() {
    let out = stdout(&["strata", "punctual-curve", "--m", "u*v", "--n", "2"]);
    assert_eq!(out, "(2): u*v\n(1,1): -u*v + u^2*v^2\ntotal: u^2*v^2\n");
    let csv = stdout(&["strata", "punctual-surface", "--class", "A^2", "--n", "2", "--format", "csv"]);
    assert_eq!(csv, "partition,class\n(2),u^2*v^2 + u^3*v^3\n\"(1,1)\",-u^2*v^2 + u^4*v^4\n");
}

#[test]
fn every_suite_passes() {
    for suite in ["axioms", "curve", "surface", "oracle", "all"] {
        let out = motivic(&["verify", "--suite", suite, "--order", "6", "--instances", "10"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["passed"], true);
        for check in report["checks"].as_array().unwrap() {
            assert_eq!(check["status"], "pass", "{check}");
            assert!(check["first_mismatch"].is_null());
        }
    }
}

#[test]
fn documented_verify_runs() {
    for args in [
        &["verify", "--suite", "curve", "--order", "10"][..],
        &["verify", "--suite", "axioms", "--order", "8", "--seed", "42"],
        &["verify", "--suite", "surface", "--order", "8"],
    ] {
        assert_eq!(motivic(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        &["series", "quot-curve", "--r", "0"][..],
        &["series", "zeta", "--order", "3"],
        &["series", "zeta", "--class", "Q^2"],
        &["series", "goettsche", "--order", "-1"],
        &["series", "nonsense"],
        &["table", "--format", "xml"],
        &["strata", "punctual-curve", "--m", "u*v", "--n", "10"],
        &["strata", "punctual-curve", "--n", "2"],
        &["strata", "punctual-curve", "--m", "u +", "--n", "2"],
        &["verify", "--suite", "everything"],
    ] {
        let out = motivic(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn byte_identical_reruns() {
    for args in [
        &["verify", "--suite", "all", "--order", "5", "--seed", "7", "--instances", "8"][..],
        &["series", "goettsche", "--class", "P^2", "--order", "6", "--format", "json"],
        &["table", "--g", "3", "--r", "2", "--nmax", "3"],
    ] {
        assert_eq!(motivic(args).stdout, motivic(args).stdout, "{args:?}");
    }
}

#[test]
fn seed_changes_instances_not_verdict() {
    let a = stdout(&["verify", "--suite", "oracle", "--order", "5", "--seed", "1", "--instances", "5"]);
    let b = stdout(&["verify", "--suite", "oracle", "--order", "5", "--seed", "2", "--instances", "5"]);
    assert_eq!(a.replace("\"seed\":1", "\"seed\":2"), b);
}
