use std::process::{Command, Output};

use coulomb_cli::commands::{cmd_eval, figure_target, EvalArgs, EvalFamily};
use coulomb_core::specfun::eval_g;
use coulomb_core::verify::boundary_image;
use coulomb_core::CoulombParams;
use num_complex::Complex64;
use serde_json::Value;

fn coulomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coulomb")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = coulomb(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(s.lines().count(), 1);
    serde_json::from_str(&s).unwrap()
}

#[test]
fn eval_sine() {
    let v = json(&["eval", "--family", "F", "--L", "0", "--eta", "0", "--z-re", "1.5707963267948966"]);
    assert!((v["outputs"]["value_re"].as_f64().unwrap() - 1.0).abs() < 1e-15);
    assert_eq!(v["command"], "eval");
}

#[test]
fn eval_bessel_zero() {
    let v = json(&["eval", "--family", "besselJ", "--L", "0.5", "--z-re", "3.1415926535"]);
    assert!(v["outputs"]["value_re"].as_f64().unwrap().abs() < 1e-10);
}

#[test]
fn eval_is_a_thin_wrapper() {
    let v = json(&["eval", "--family", "g", "--L", "1", "--eta", "-1", "--z-re", "1"]);
    let lib = eval_g(&CoulombParams::new(1.0, -1.0), Complex64::new(1.0, 0.0), 1e-15).unwrap();
    assert_eq!(v["outputs"]["value_re"].as_f64().unwrap(), lib.value.re);
    assert_eq!(v["outputs"]["derivative_re"].as_f64().unwrap(), lib.derivative.re);

    let args = EvalArgs {
        family: EvalFamily::G,
        l: 1.0,
        l_im: 0.0,
        eta: -1.0,
        z_re: 1.0,
        z_im: 0.0,
        tol: 1e-15,
        h: 0.0,
    };
    let rec = cmd_eval(&args).unwrap();
    assert_eq!(rec.outputs["value_re"].as_f64().unwrap(), lib.value.re);
}

#[test]
fn radius_figures() {
    let v = json(&["radius", "--family", "f", "--L", "-0.5", "--eta", "0", "--beta", "0"]);
    assert!((v["outputs"]["value"].as_f64().unwrap() - 0.9407705639497375).abs() < 1e-10);
    assert_eq!(v["outputs"]["bracket"].as_array().unwrap().len(), 2);
    let v = json(&["radius", "--family", "g", "--L", "0", "--eta", "0", "--beta", "0"]);
    assert!((v["outputs"]["value"].as_f64().unwrap() - 1.5707963267948968).abs() < 1e-12);
    let v = json(&["radius", "--family", "phi", "--nu", "1", "--alpha", "0", "--beta", "0"]);
    assert!((v["outputs"]["value"].as_f64().unwrap() - 1.8411837813).abs() < 1e-9);
}

#[test]
fn radius_csv() {
    let out = coulomb(&["radius", "--family", "g", "--L", "0", "--csv"]);
    let s = String::from_utf8(out.stdout).unwrap();
    let mut lines = s.lines();
    let head: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&head[..4], &["family", "L", "eta", "beta"]);
    assert!(head.contains(&"value"));
    assert!(lines.next().unwrap().starts_with("g,0.0,0.0,0.0,1.57079632679489"));
}

#[test]
fn gate_violation_exit_code() {
    let out = coulomb(&["radius", "--family", "f", "--L", "1", "--eta", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("requires eta <= 0"));
    let out = coulomb(&["eval", "--family", "g", "--L", "-1.5", "--z-re", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn numerical_failure_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_coulomb"))
        .args(["eval", "--family", "g", "--L", "1", "--z-re", "30"])
        .env("COULOMB_MAX_TERMS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn rayleigh_exact() {
    let v = json(&["rayleigh", "--L", "1", "--eta", "0", "--kmax", "2", "--which", "Z", "--exact"]);
    assert_eq!(v["outputs"]["Z"]["2"], "1/5");
    let v = json(&["rayleigh", "--L", "0.5", "--eta", "0", "--kmax", "2", "--which", "Ztilde", "--exact"]);
    assert_eq!(v["outputs"]["Ztilde"]["2"], "7/12");
    let v = json(&["rayleigh", "--L", "2", "--eta", "-1", "--kmax", "3", "--which", "Z"]);
    assert!((v["outputs"]["Z"]["2"].as_f64().unwrap() - 10.0 / 63.0).abs() < 1e-16);
}

#[test]
fn rayleigh_zeta_strings() {
    let v = json(&["rayleigh", "--which", "zeta", "--kmax", "4", "--nmax", "2"]);
    let row = v["outputs"]["zeta"]["2"].as_array().unwrap();
    assert_eq!(row[0], "1/2");
    assert_eq!(row[1], "-3/4");
    assert_eq!(row[2], "9/8 + 1/2*eta^2");
    assert_eq!(v["outputs"]["zeta"]["4"].as_array().unwrap().len(), 3);
}

#[test]
fn asympt_outputs() {
    let v = json(&["asympt", "--N", "1"]);
    assert_eq!(v["outputs"]["c"], "sqrt2");
    assert_eq!(v["outputs"]["eps"][0], "5*sqrt2/4 - 1/4 + eta");
    let v = json(&["asympt", "--eta", "-1", "--N", "4", "--L", "100", "200"]);
    let r = v["outputs"]["radius"].as_array().unwrap();
    assert_eq!(r.len(), 2);
    let r100 = coulomb_core::asympt::radius_asymptotic(100.0, -1.0, 4).unwrap();
    assert_eq!(r[0].as_f64().unwrap(), r100);
}

#[test]
fn asympt_validate_reports_slope() {
    let v = json(&["asympt", "--eta", "-1", "--N", "2", "--validate"]);
    assert_eq!(v["outputs"]["expected_slope"].as_f64(), Some(-3.0));
    assert!(v["outputs"]["slope"].as_f64().unwrap().is_finite());
    assert_eq!(v["outputs"]["scaled_errors"].as_array().unwrap().len(), 4);
}

#[test]
fn figure_two_stdout() {
    let out = coulomb(&["figure", "--figure", "2", "--points", "4"]);
    let s = String::from_utf8(out.stdout).unwrap();
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("t,re,im"));
    let first: Vec<f64> = lines.next().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!((first[1] - 1.0).abs() < 1e-14 && first[2].abs() < 1e-14);
}

#[test]
fn figure_file_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let v = json(&["figure", "--figure", "1", "--points", "512", "--out", path.to_str().unwrap()]);
    assert_eq!(v["outputs"]["path"], path.to_str().unwrap());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 512);
    let (h, r) = figure_target(1).unwrap();
    let pts = boundary_image(&h, r, 512).unwrap();
    for (row, (t, z)) in rows.iter().zip(&pts) {
        assert!((row[0] - t).abs() <= 1e-15 * t.abs().max(1.0));
        assert!((row[1] - z.re).abs() <= 1e-15 && (row[2] - z.im).abs() <= 1e-15);
    }
    // closed and conjugate-symmetric
    assert!((rows[0][1] - rows[511][1]).abs() < 1e-12 && (rows[0][2] - rows[511][2]).abs() < 1e-12);
    for j in 1..256 {
        assert!((rows[j][1] - rows[511 - j][1]).abs() < 1e-12);
        assert!((rows[j][2] + rows[511 - j][2]).abs() < 1e-12);
    }
}

#[test]
fn figure_io_error() {
    let out = coulomb(&["figure", "--figure", "2", "--points", "8", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(3));
}
