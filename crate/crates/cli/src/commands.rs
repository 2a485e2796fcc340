use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coulomb_core::asympt::{empirical_order, epsilon_coeffs, radius_asymptotic_with};
use coulomb_core::exact::BigRational;
use coulomb_core::radii::{radius_f, radius_g, radius_phi, RadiusResult};
use coulomb_core::rayleigh::{
    rayleigh_z_exact, rayleigh_z_f64, rayleigh_ztilde_exact, rayleigh_ztilde_f64, RayleighTable, ZetaTable,
};
use coulomb_core::specfun::{eval_F_with, eval_bessel_j, eval_dini, eval_f_with, eval_g_with, EvalConfig, SeriesEval};
use coulomb_core::verify::{boundary_image, Normalized};
use coulomb_core::CoulombParams;
use num_bigint::BigInt;
use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::checks;
use crate::record::{fmt17, num, OutputRecord};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] coulomb_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0} of 10 acceptance criteria failed")]
    ChecksFailed(usize),
}

impl CliError {
    /// 2 for parameter gates and bad input, 3 for IO, 4 for numerical
    /// failures, 1 when `verify-all` has failing criteria.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_gate_violation() => 2,
            CliError::Core(_) => 4,
            CliError::Io(_) => 3,
            CliError::Usage(_) => 2,
            CliError::ChecksFailed(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "coulomb", version, about = "Coulomb wave functions, Rayleigh sums and radii of starlikeness")]
pub struct Cli {
    /// Print the record as CSV (header and one row) instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pub csv: bool,
    /// Print the record as a single JSON line (the default).
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate F, g, f, J_nu or the Dini combination at one point.
    Eval(EvalArgs),
    /// Radius of starlikeness of order beta.
    Radius(RadiusArgs),
    /// Rayleigh sums Z, Z~ or the Laurent coefficients zeta.
    Rayleigh(RayleighArgs),
    /// Coefficients of the large-L expansion of the radius of starlikeness.
    Asympt(AsymptArgs),
    /// Boundary curve of one of the two figures, as CSV `t,re,im`.
    Figure(FigureArgs),
    /// Run the acceptance criteria and print one line per criterion.
    VerifyAll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalFamily {
    #[value(name = "F")]
    CoulombF,
    #[value(name = "g")]
    G,
    #[value(name = "f")]
    F,
    #[value(name = "besselJ")]
    BesselJ,
    #[value(name = "dini")]
    Dini,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub family: EvalFamily,
    /// Order L (nu for besselJ and dini).
    #[arg(long = "L", alias = "nu", default_value_t = 0.0)]
    pub l: f64,
    /// Imaginary part of L.
    #[arg(long = "L-im", default_value_t = 0.0)]
    pub l_im: f64,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    #[arg(long = "z-re")]
    pub z_re: f64,
    #[arg(long = "z-im", default_value_t = 0.0)]
    pub z_im: f64,
    #[arg(long, default_value_t = 1e-15)]
    pub tol: f64,
    /// H in r J_nu'(r) + H J_nu(r).
    #[arg(long = "H", default_value_t = 0.0)]
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RadiusFamily {
    F,
    G,
    Phi,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct RadiusArgs {
    #[arg(long, value_enum)]
    pub family: RadiusFamily,
    /// Order L (nu for phi).
    #[arg(long = "L", alias = "nu", default_value_t = 0.0)]
    pub l: f64,
    /// eta (alpha for phi).
    #[arg(long, alias = "alpha", default_value_t = 0.0)]
    pub eta: f64,
    #[arg(long, default_value_t = 0.0)]
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "Z")]
    Z,
    #[value(name = "Ztilde")]
    Ztilde,
    #[value(name = "zeta")]
    Zeta,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct RayleighArgs {
    /// Order L; exact input accepts `p/q` and decimals.
    #[arg(long = "L", default_value = "0")]
    pub l: String,
    #[arg(long, default_value = "0")]
    pub eta: String,
    #[arg(long, default_value_t = 4)]
    pub kmax: usize,
    #[arg(long, value_enum, default_value = "Z")]
    pub which: Which,
    /// Exact rational arithmetic; values print as `p/q`.
    #[arg(long)]
    pub exact: bool,
    /// Highest Laurent index for `--which zeta`.
    #[arg(long, default_value_t = 3)]
    pub nmax: usize,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct AsymptArgs {
    /// Evaluate the coefficients (and radii) at this eta.
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long = "N", default_value_t = 2)]
    pub n: usize,
    /// Orders at which to evaluate the expansion.
    #[arg(long = "L", num_args = 1..)]
    pub l: Vec<f64>,
    /// Fit the error against direct radii on L = 25, 50, 100, 200.
    #[arg(long)]
    pub validate: bool,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub figure: u8,
    #[arg(long, default_value_t = 512)]
    pub points: usize,
    /// Output file; the CSV goes to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Default limits, with `COULOMB_MAX_TERMS` overriding the series length.
pub fn eval_config(tol: f64) -> Result<EvalConfig, CliError> {
    let mut cfg = EvalConfig { tol, ..EvalConfig::default() };
    if let Ok(v) = std::env::var("COULOMB_MAX_TERMS") {
        cfg.max_terms = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("COULOMB_MAX_TERMS must be a positive integer, got {:?}", v)))?;
    }
    Ok(cfg)
}

/// `p/q`, an integer, or a decimal such as `-0.25` or `1.5e-3`, exactly.
pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Usage(format!("not a rational number: {:?}", s));
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if frac.starts_with(['+', '-']) || (int.is_empty() && frac.is_empty()) {
        return Err(bad());
    }
    let digits = format!("{}{}", int, frac);
    let n: BigInt = if digits == "-" || digits == "+" || digits.is_empty() {
        return Err(bad());
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let e = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Ok(if e >= 0 {
        BigRational::from_integer(n * num_traits::pow(ten, e as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, (-e) as usize))
    })
}

fn series_outputs(rec: &mut OutputRecord, s: &SeriesEval) {
    rec.output("value_re", num(s.value.re));
    rec.output("value_im", num(s.value.im));
    rec.output("derivative_re", num(s.derivative.re));
    rec.output("derivative_im", num(s.derivative.im));
    rec.output("terms_used", s.terms_used as u64);
    rec.output("est_error", num(s.est_error));
}

pub fn cmd_eval(a: &EvalArgs) -> Result<OutputRecord, CliError> {
    let family = a.family.to_possible_value().unwrap().get_name().to_string();
    let mut rec = OutputRecord::new("eval")
        .input("family", family)
        .input("L", num(a.l))
        .input("L_im", num(a.l_im))
        .input("eta", num(a.eta))
        .input("z_re", num(a.z_re))
        .input("z_im", num(a.z_im))
        .input("tol", num(a.tol));
    let z = Complex64::new(a.z_re, a.z_im);
    let p = CoulombParams::complex(Complex64::new(a.l, a.l_im), a.eta);
    let cfg = eval_config(a.tol)?;
    let s = match a.family {
        EvalFamily::CoulombF => eval_F_with(&p, z, &cfg)?,
        EvalFamily::G => eval_g_with(&p, z, &cfg)?,
        EvalFamily::F => eval_f_with(&p, z, &cfg)?,
        EvalFamily::BesselJ => eval_bessel_j(a.l, z)?,
        EvalFamily::Dini => {
            if a.z_im != 0.0 {
                return Err(CliError::Usage("dini is evaluated on the positive real axis".into()));
            }
            rec = rec.input("H", num(a.h));
            rec.output("value", num(eval_dini(a.l, a.h, a.z_re)?));
            return Ok(rec);
        }
    };
    series_outputs(&mut rec, &s);
    Ok(rec)
}

fn radius_outputs(rec: &mut OutputRecord, r: &RadiusResult) {
    rec.output("value", num(r.value));
    rec.output("bracket", Value::Array(vec![num(r.bracket.0), num(r.bracket.1)]));
    rec.output("residual", num(r.residual));
    rec.output("scale", num(r.scale));
    rec.output("iterations", r.iterations as u64);
    rec.output("near_double_root", r.flags.near_double_root);
    rec.output("close_to_origin", r.flags.close_to_origin);
    if r.flags.near_double_root {
        rec.note("the reduced form touches zero at the root (double root or near miss)");
    }
}

pub fn cmd_radius(a: &RadiusArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("radius").input("family", format!("{:?}", a.family).to_lowercase());
    let r = match a.family {
        RadiusFamily::F | RadiusFamily::G => {
            rec = rec.input("L", num(a.l)).input("eta", num(a.eta)).input("beta", num(a.beta));
            if a.family == RadiusFamily::F {
                radius_f(a.l, a.eta, a.beta)?
            } else {
                radius_g(a.l, a.eta, a.beta)?
            }
        }
        RadiusFamily::Phi => {
            rec = rec.input("nu", num(a.l)).input("alpha", num(a.eta)).input("beta", num(a.beta));
            radius_phi(a.l, a.eta, a.beta)?
        }
    };
    radius_outputs(&mut rec, &r);
    Ok(rec)
}

fn table_to_json<F>(t: &RayleighTable<F>, f: impl Fn(&F) -> Value) -> Value {
    let mut m = Map::new();
    for (k, v) in t.iter() {
        m.insert(k.to_string(), f(v));
    }
    Value::Object(m)
}

pub fn cmd_rayleigh(a: &RayleighArgs) -> Result<OutputRecord, CliError> {
    let which = a.which.to_possible_value().unwrap().get_name().to_string();
    let mut rec = OutputRecord::new("rayleigh").input("which", which).input("kmax", a.kmax as u64);
    if a.which == Which::Zeta {
        rec = rec.input("nmax", a.nmax as u64);
        if a.kmax < 2 {
            return Err(CliError::Usage("--kmax must be at least 2".into()));
        }
        let t = ZetaTable::new(a.kmax, a.nmax);
        let mut m = Map::new();
        for k in 2..=a.kmax {
            let row = t.row(k).iter().map(|p| Value::String(p.to_string())).collect();
            m.insert(k.to_string(), Value::Array(row));
        }
        rec.output("zeta", Value::Object(m));
        rec.note("zeta[k][n] multiplies L^-n in L^(k-1) Z^(k) (k even) or L^k Z^(k) (k odd)");
        return Ok(rec);
    }
    rec = rec.input("L", a.l.clone()).input("eta", a.eta.clone()).input("exact", a.exact);
    let key = if a.which == Which::Z { "Z" } else { "Ztilde" };
    if a.exact {
        let (l, eta) = (parse_rational(&a.l)?, parse_rational(&a.eta)?);
        let t = if a.which == Which::Z {
            rayleigh_z_exact(&l, &eta, a.kmax)?
        } else {
            rayleigh_ztilde_exact(&l, &eta, a.kmax)?
        };
        rec.output(key, table_to_json(&t, |v| Value::String(v.to_string())));
    } else {
        let parse = |s: &str| s.trim().parse::<f64>().or_else(|_| {
            parse_rational(s).map(|q| coulomb_core::exact::ToF64::to_f64(&q))
        });
        let p = CoulombParams::new(parse(&a.l)?, parse(&a.eta)?);
        let t = if a.which == Which::Z { rayleigh_z_f64(&p, a.kmax)? } else { rayleigh_ztilde_f64(&p, a.kmax)? };
        rec.output(key, table_to_json(&t, |v| num(*v)));
    }
    Ok(rec)
}

pub const VALIDATION_GRID: [f64; 4] = [25.0, 50.0, 100.0, 200.0];

pub fn cmd_asympt(a: &AsymptArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("asympt").input("N", a.n as u64);
    if let Some(eta) = a.eta {
        rec = rec.input("eta", num(eta));
    }
    if !a.l.is_empty() {
        rec = rec.input("L", Value::Array(a.l.iter().map(|&x| num(x)).collect()));
    }
    rec = rec.input("validate", a.validate);
    let t = epsilon_coeffs(a.n);
    rec.output("c", t.c.to_string());
    rec.output("eps", Value::Array(t.eps().iter().map(|e| Value::String(e.to_string())).collect()));
    if let Some(eta) = a.eta {
        rec.output("eps_at_eta", Value::Array(t.eps().iter().map(|e| num(e.eval_f64(eta))).collect()));
    }
    if !a.l.is_empty() {
        let eta = a.eta.ok_or_else(|| CliError::Usage("--L needs --eta".into()))?;
        let mut v = Vec::with_capacity(a.l.len());
        for &l in &a.l {
            v.push(num(radius_asymptotic_with(&t, l, eta, a.n)?));
        }
        rec.output("radius", Value::Array(v));
    }
    if a.validate {
        let eta = a.eta.unwrap_or(-1.0);
        let fit = empirical_order(&VALIDATION_GRID, eta, a.n)?;
        let expected = -(a.n as f64 + 1.0);
        rec.output("grid", Value::Array(VALIDATION_GRID.iter().map(|&x| num(x)).collect()));
        rec.output("scaled_errors", Value::Array(fit.errors.iter().map(|e| num(e.1)).collect()));
        rec.output("slope", num(fit.slope));
        rec.output("fit_residual", num(fit.residual));
        rec.output("expected_slope", num(expected));
        let ok = (fit.slope - expected).abs() <= 0.5;
        rec.output("within_window", ok);
        if !ok {
            rec.note(format!("scaled-error slope {:.3} is outside {} +/- 0.5", fit.slope, expected));
        }
    }
    Ok(rec)
}

/// The normalized function and radius behind each figure.
pub fn figure_target(figure: u8) -> Result<(Normalized, f64), CliError> {
    Ok(match figure {
        1 => (Normalized::F(CoulombParams::new(-0.5, 0.0)), radius_f(-0.5, 0.0, 0.0)?.value),
        2 => (Normalized::G(CoulombParams::new(0.0, 0.0)), radius_g(0.0, 0.0, 0.0)?.value),
        _ => return Err(CliError::Usage("--figure is 1 or 2".into())),
    })
}

pub fn figure_csv(points: &[(f64, Complex64)]) -> String {
    let mut s = String::from("t,re,im\n");
    for (t, z) in points {
        s.push_str(&format!("{},{},{}\n", fmt17(*t), fmt17(z.re), fmt17(z.im)));
    }
    s
}

pub fn cmd_figure(a: &FigureArgs) -> Result<(OutputRecord, Option<String>), CliError> {
    let (h, r) = figure_target(a.figure)?;
    let pts = boundary_image(&h, r, a.points)?;
    let csv = figure_csv(&pts);
    let mut rec = OutputRecord::new("figure").input("figure", a.figure as u64).input("points", a.points as u64);
    rec.output("radius", num(r));
    match &a.out {
        Some(path) => {
            std::fs::File::create(path)?.write_all(csv.as_bytes())?;
            rec.output("path", path.display().to_string());
            Ok((rec, None))
        }
        None => Ok((rec, Some(csv))),
    }
}

/// Runs one command and returns the text to print.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let render = |r: &OutputRecord| if cli.csv { r.to_csv() } else { format!("{}\n", r.to_json_line()) };
    match &cli.command {
        Command::Eval(a) => Ok(render(&cmd_eval(a)?)),
        Command::Radius(a) => Ok(render(&cmd_radius(a)?)),
        Command::Rayleigh(a) => Ok(render(&cmd_rayleigh(a)?)),
        Command::Asympt(a) => Ok(render(&cmd_asympt(a)?)),
        Command::Figure(a) => match cmd_figure(a)? {
            (_, Some(csv)) => Ok(csv),
            (rec, None) => Ok(render(&rec)),
        },
        Command::VerifyAll => {
            let mut out = String::new();
            let mut failed = 0;
            for c in checks::run_all() {
                if !c.passed {
                    failed += 1;
                }
                out.push_str(&c.line());
                out.push('\n');
            }
            print!("{}", out);
            if failed > 0 {
                return Err(CliError::ChecksFailed(failed));
            }
            Ok(String::new())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn rationals_parse_exactly() {
        assert_eq!(parse_rational("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rational(" -6/8 ").unwrap(), q(-3, 4));
        assert_eq!(parse_rational("0.1").unwrap(), q(1, 10));
        assert_eq!(parse_rational("-1.25e2").unwrap(), q(-125, 1));
        assert_eq!(parse_rational("2.5E-3").unwrap(), q(1, 400));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        for bad in ["", "1/0", "-", "x", "1.-2", "1e", "."] {
            assert!(matches!(parse_rational(bad), Err(CliError::Usage(_))), "{:?}", bad);
        }
    }
}
