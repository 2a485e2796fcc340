//! Evaluation of the regular Coulomb wave function `F`, its normalized forms
//! `g = z^-L F / C_L` and `f = (z^L g)^(1/(L+1))`, and Bessel `J_nu`.
//!
//! Series are summed in double-double arithmetic. Where cancellation would
//! eat the extra digits (large real arguments at large order) the series is
//! only used close to the origin and `g` is carried outwards by Taylor
//! continuation of its differential equation.

mod gamma;
mod kernel;
mod taylor;

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::dd::{Dd, DdComplex, DdScalar};
use crate::error::{Error, Result};
use crate::exact::{BigRational, Field, Ring};
use crate::params::CoulombParams;

pub use gamma::ln_gamma;
pub use taylor::RaySweep;

pub const DEFAULT_MAX_TERMS: usize = 10_000;
pub const DEFAULT_TOL: f64 = 1e-15;

/// Relative rounding budget (against `|g| + |z g'|`) at which the series
/// hands over to continuation.
const START_BUDGET: f64 = 1e-22;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEval {
    pub value: Complex64,
    pub derivative: Complex64,
    pub terms_used: usize,
    /// Estimated bound on the error of `value` (truncation and rounding).
    pub est_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { tol: DEFAULT_TOL, max_terms: DEFAULT_MAX_TERMS }
    }
}

impl EvalConfig {
    fn check(&self) -> Result<()> {
        if !(self.tol > 1e-16 && self.tol < 1e-6) {
            return Err(Error::GateViolation("requires 1e-16 < tol < 1e-6"));
        }
        Ok(())
    }
}

/// `a_0..=a_n_max` of `g(z) = sum a_n z^(n+1)` in any field.
pub fn coulomb_series_coeffs<F: Field>(l: &F, eta: &F, n_max: usize) -> Result<Vec<F>> {
    let l1 = l.plus(&F::one());
    let mut a = alloc::vec![F::one()];
    if n_max == 0 {
        return Ok(a);
    }
    a.push(eta.divide(&l1).ok_or(Error::DegenerateOrder("L = -1"))?);
    let two_eta = eta.plus(eta);
    let two_l1 = l.plus(l).plus(&F::one());
    for n in 2..=n_max {
        let nf = F::from_i64(n as i64);
        let den = nf.times(&nf.plus(&two_l1));
        let num = two_eta.times(&a[n - 1]).minus(&a[n - 2]);
        a.push(num.divide(&den).ok_or(Error::DegenerateOrder("n(n+2L+1) = 0"))?);
    }
    Ok(a)
}

/// Exact coefficients for rational `L > -1` and `eta`.
pub fn coulomb_series_coeffs_exact(l: &BigRational, eta: &BigRational, n_max: usize) -> Result<Vec<BigRational>> {
    if *l <= BigRational::from_i64(-1) {
        return Err(Error::GateViolation("requires L > -1"));
    }
    coulomb_series_coeffs(l, eta, n_max)
}

/// Float coefficients; complex `L` allowed.
pub fn coulomb_series_coeffs_f64(params: &CoulombParams, n_max: usize) -> Result<Vec<Complex64>> {
    check_order(params)?;
    coulomb_series_coeffs(&params.l, &Complex64::new(params.eta, 0.0), n_max)
}

fn check_order(params: &CoulombParams) -> Result<()> {
    if params.is_real() {
        let t = 2.0 * params.l.re + 1.0;
        if params.l.re <= -1.0 || (t < 0.0 && t == t.round()) {
            return Err(Error::GateViolation("requires L > -1"));
        }
    } else if params.l.re <= -1.0 {
        return Err(Error::GateViolation("requires Re L > -1"));
    }
    if !params.eta.is_finite() || !params.l.re.is_finite() || !params.l.im.is_finite() {
        return Err(Error::GateViolation("requires finite parameters"));
    }
    Ok(())
}

struct Raw<T> {
    g: T,
    dg: T,
    terms: usize,
    err: f64,
}

fn accepted<T: DdScalar>(s: &kernel::SeriesSum<T>, budget: f64) -> bool {
    s.round + s.round_z <= budget * s.envelope()
}

fn g_along_ray<T: DdScalar>(l: T, l_c: Complex64, eta: f64, dir: T, r: f64, cfg: &EvalConfig) -> Result<Raw<T>> {
    let z = dir.scale(r);
    let s = kernel::sum_g(l, l_c, eta, z, cfg.tol, cfg.max_terms)?;
    if accepted(&s, 0.1 * cfg.tol) {
        return Ok(Raw { g: s.value, dg: s.zderiv / z, terms: s.terms, err: s.error() });
    }
    let mut r0 = r;
    let start = loop {
        r0 *= 0.5;
        if r0 < 1e-3 {
            return Err(Error::NonConvergence { terms: cfg.max_terms });
        }
        let s0 = kernel::sum_g(l, l_c, eta, dir.scale(r0), 1e-17, cfg.max_terms)?;
        if accepted(&s0, START_BUDGET) {
            break s0;
        }
    };
    let z0 = dir.scale(r0);
    let rel0 = (start.error() + start.error_z()) / start.envelope();
    let mut sweep = RaySweep::new(l, eta, dir, r0, start.value, start.zderiv / z0, rel0);
    let (g, dg, rel) = sweep.eval(r)?;
    let env = g.magnitude() + r * dg.magnitude();
    Ok(Raw { g, dg, terms: start.terms + sweep.terms(), err: rel * env })
}

fn finish<T: DdScalar>(raw: Raw<T>) -> SeriesEval {
    let value = raw.g.to_c64();
    SeriesEval {
        value,
        derivative: raw.dg.to_c64(),
        terms_used: raw.terms,
        est_error: raw.err + 1.2e-16 * value.norm(),
    }
}

/// `g_{L,eta}(z) = sum a_n z^(n+1)` and `g'`.
pub fn eval_g(params: &CoulombParams, z: Complex64, tol: f64) -> Result<SeriesEval> {
    eval_g_with(params, z, &EvalConfig { tol, ..EvalConfig::default() })
}

pub fn eval_g_with(params: &CoulombParams, z: Complex64, cfg: &EvalConfig) -> Result<SeriesEval> {
    cfg.check()?;
    check_order(params)?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::GateViolation("requires finite z"));
    }
    let r = z.norm();
    if r == 0.0 {
        return Ok(SeriesEval {
            value: Complex64::new(0.0, 0.0),
            derivative: Complex64::new(1.0, 0.0),
            terms_used: 1,
            est_error: 0.0,
        });
    }
    if params.is_real() && z.im == 0.0 {
        let dir = Dd::new(z.re.signum());
        let raw = g_along_ray(Dd::new(params.l.re), params.l, params.eta, dir, r, cfg)?;
        Ok(finish(raw))
    } else {
        let dir = DdComplex::from(z / r);
        let raw = g_along_ray(DdComplex::from(params.l), params.l, params.eta, dir, r, cfg)?;
        Ok(finish(raw))
    }
}

/// `log C_L(eta)` with `C_L = 2^L e^(-pi eta/2) |Gamma(L+1+i eta)| / Gamma(2L+2)`.
pub fn log_normalization(params: &CoulombParams) -> Complex64 {
    let l = params.l;
    let eta = params.eta;
    let abs_gamma = ln_gamma(l + Complex64::new(1.0, eta)).re;
    l * core::f64::consts::LN_2 - PI * eta / 2.0 + abs_gamma - ln_gamma(l * 2.0 + 2.0)
}

/// `F_{L,eta}(z) = C_L(eta) z^L g(z)` with the principal branch of `z^L`.
#[allow(non_snake_case)]
pub fn eval_F(params: &CoulombParams, z: Complex64) -> Result<SeriesEval> {
    eval_F_with(params, z, &EvalConfig::default())
}

#[allow(non_snake_case)]
pub fn eval_F_with(params: &CoulombParams, z: Complex64, cfg: &EvalConfig) -> Result<SeriesEval> {
    let g = eval_g_with(params, z, cfg)?;
    let log_c = log_normalization(params);
    if !(log_c.re.is_finite() && log_c.im.is_finite()) {
        return Err(Error::GammaOverflow);
    }
    if z.norm() == 0.0 {
        let l = params.l;
        let derivative = if l.re == 0.0 && l.im == 0.0 {
            log_c.exp()
        } else if l.re > 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            return Err(Error::GateViolation("derivative of F at z = 0 requires Re L >= 0"));
        };
        return Ok(SeriesEval { derivative, ..g });
    }
    let log_p = log_c + params.l * z.ln();
    if log_p.re > 709.0 {
        return Err(Error::GammaOverflow);
    }
    let p = log_p.exp();
    Ok(SeriesEval {
        value: p * g.value,
        derivative: p * (params.l * g.value / z + g.derivative),
        terms_used: g.terms_used,
        est_error: p.norm() * g.est_error,
    })
}

/// `f_{L,eta}(z) = z (g(z)/z)^(1/(L+1))`, the normalization with `f'(0) = 1`.
pub fn eval_f(params: &CoulombParams, z: Complex64) -> Result<SeriesEval> {
    eval_f_with(params, z, &EvalConfig::default())
}

pub fn eval_f_with(params: &CoulombParams, z: Complex64, cfg: &EvalConfig) -> Result<SeriesEval> {
    let g = eval_g_with(params, z, cfg)?;
    if z.norm() == 0.0 {
        return Ok(g);
    }
    let l1 = params.l + 1.0;
    let value = z * ((g.value / z).ln() / l1).exp();
    let log_deriv = (params.l + z * g.derivative / g.value) / (l1 * z);
    let rel = g.est_error / g.value.norm() / l1.norm();
    Ok(SeriesEval {
        value,
        derivative: value * log_deriv,
        terms_used: g.terms_used,
        est_error: rel * value.norm() + 1.2e-16 * value.norm(),
    })
}

fn check_nu(nu: f64) -> Result<()> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(Error::GateViolation("requires nu > -1"));
    }
    Ok(())
}

/// `S` and `z S'` where `J_nu(z) = (z/2)^nu / Gamma(nu+1) * S(z)`; real `x`.
pub(crate) fn bessel_reduced(nu: f64, x: f64) -> Result<(f64, f64, f64)> {
    let s = kernel::sum_bessel(nu, Dd::new(x), DEFAULT_TOL, DEFAULT_MAX_TERMS)?;
    Ok((s.value.to_f64(), s.zderiv.to_f64(), s.error() + s.error_z()))
}

/// `J_nu(z)` and `J_nu'(z)` by the ascending series.
pub fn eval_bessel_j(nu: f64, z: Complex64) -> Result<SeriesEval> {
    check_nu(nu)?;
    let zero = Complex64::new(0.0, 0.0);
    if z.norm() == 0.0 {
        let (value, derivative) = if nu == 0.0 {
            (Complex64::new(1.0, 0.0), zero)
        } else if nu == 1.0 {
            (zero, Complex64::new(0.5, 0.0))
        } else if nu > 1.0 {
            (zero, zero)
        } else {
            return Err(Error::GateViolation("J_nu' at 0 requires nu = 0 or nu >= 1"));
        };
        return Ok(SeriesEval { value, derivative, terms_used: 1, est_error: 0.0 });
    }
    let (s, zs, terms, err) = if z.im == 0.0 {
        let k = kernel::sum_bessel(nu, Dd::new(z.re), DEFAULT_TOL, DEFAULT_MAX_TERMS)?;
        (k.value.to_c64(), k.zderiv.to_c64(), k.terms, k.error())
    } else {
        let k = kernel::sum_bessel(nu, DdComplex::from(z), DEFAULT_TOL, DEFAULT_MAX_TERMS)?;
        (k.value.to_c64(), k.zderiv.to_c64(), k.terms, k.error())
    };
    let p = ((z / 2.0).ln() * nu - libm::lgamma(nu + 1.0)).exp();
    let value = p * s;
    Ok(SeriesEval {
        value,
        derivative: p * (s * nu + zs) / z,
        terms_used: terms,
        est_error: p.norm() * err + 1.2e-16 * value.norm(),
    })
}

/// The Dini combination `r J_nu'(r) + H J_nu(r)`.
pub fn eval_dini(nu: f64, h: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::GateViolation("requires r > 0"));
    }
    let j = eval_bessel_j(nu, Complex64::new(r, 0.0))?;
    Ok(r * j.derivative.re + h * j.value.re)
}

/// Repeated evaluation of `g` and `g'` on the positive real axis, reusing a
/// single continuation chain once the series becomes ill-conditioned.
#[derive(Debug, Clone)]
pub struct RealAxisG {
    l: f64,
    eta: f64,
    cfg: EvalConfig,
    sweep: Option<RaySweep<Dd>>,
}

impl RealAxisG {
    pub fn new(l: f64, eta: f64) -> Result<Self> {
        Self::with_config(l, eta, EvalConfig::default())
    }

    pub fn with_config(l: f64, eta: f64, cfg: EvalConfig) -> Result<Self> {
        cfg.check()?;
        check_order(&CoulombParams::new(l, eta))?;
        Ok(RealAxisG { l, eta, cfg, sweep: None })
    }

    pub fn order(&self) -> f64 {
        self.l
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// `(g(x), g'(x))` for `x > 0`.
    pub fn eval(&mut self, x: f64) -> Result<(f64, f64)> {
        let (g, dg) = self.eval_dd(x)?;
        Ok((g.to_f64(), dg.to_f64()))
    }

    pub fn eval_dd(&mut self, x: f64) -> Result<(Dd, Dd)> {
        if x <= 0.0 {
            return Ok((Dd::ZERO, Dd::ONE));
        }
        if let Some(sw) = self.sweep.as_mut() {
            if x >= sw.start() {
                let (g, dg, _) = sw.eval(x)?;
                return Ok((g, dg));
            }
        }
        let l = Dd::new(self.l);
        let l_c = Complex64::new(self.l, 0.0);
        let s = kernel::sum_g(l, l_c, self.eta, Dd::new(x), 1e-17, self.cfg.max_terms)?;
        if accepted(&s, START_BUDGET) {
            return Ok((s.value, s.zderiv / Dd::new(x)));
        }
        let mut r0 = x;
        let start = loop {
            r0 *= 0.5;
            if r0 < 1e-3 {
                return Err(Error::NonConvergence { terms: self.cfg.max_terms });
            }
            let s0 = kernel::sum_g(l, l_c, self.eta, Dd::new(r0), 1e-17, self.cfg.max_terms)?;
            if accepted(&s0, START_BUDGET) {
                break s0;
            }
        };
        let rel0 = (start.error() + start.error_z()) / start.envelope();
        let mut sw = RaySweep::new(l, self.eta, Dd::ONE, r0, start.value, start.zderiv / Dd::new(r0), rel0);
        let (g, dg, _) = sw.eval(x)?;
        self.sweep = Some(sw);
        Ok((g, dg))
    }
}

#[cfg(test)]
mod tests;
