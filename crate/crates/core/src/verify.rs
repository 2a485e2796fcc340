//! Independent checks: boundary-circle scans of `Re(e^(i theta) z h'/h)`,
//! Rayleigh sums by direct summation over enumerated zeros, the Dini sum
//! and the figure curves.
//!
//! Scans sample only the circle `|z| = r`. The real part of `z h'/h` is
//! harmonic in the disk once `h` has no zeros there besides the origin, so
//! its minimum over the closed disk is taken on the boundary.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::params::CoulombParams;
use crate::radii::{coulomb_reduced_root, radius_f, radius_g, radius_phi, Family};
use crate::specfun::{bessel_reduced, eval_bessel_j, eval_g, RealAxisG, DEFAULT_TOL};

/// A normalized function `h` with `h(0) = 0`, `h'(0) = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Normalized {
    /// `f_{L,eta} = z (g/z)^(1/(L+1))`.
    F(CoulombParams),
    /// `g_{L,eta}`.
    G(CoulombParams),
    /// `phi_{nu,alpha} = z (S(z))^(1/(nu+alpha))`, `S` the reduced Bessel series.
    Phi { nu: f64, alpha: f64 },
}

impl Normalized {
    pub fn family(&self) -> Family {
        match self {
            Normalized::F(_) => Family::FPower,
            Normalized::G(_) => Family::FShift,
            Normalized::Phi { .. } => Family::BesselGen,
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            Normalized::F(p) | Normalized::G(p) => {
                if !(p.l.re > -1.0) {
                    return Err(Error::GateViolation("requires Re L > -1"));
                }
            }
            Normalized::Phi { nu, alpha } => {
                if !(*nu > 0.0) {
                    return Err(Error::GateViolation("requires nu > 0"));
                }
                if !(nu + alpha > 0.0) {
                    return Err(Error::GateViolation("requires nu + alpha > 0"));
                }
            }
        }
        Ok(())
    }

    /// `(h(z), z h'(z)/h(z))`, or `PoleOnCircle` where the underlying series
    /// vanishes.
    fn eval(&self, z: Complex64, angle: f64) -> Result<(Complex64, Complex64)> {
        let pole = Error::PoleOnCircle { angle };
        match self {
            Normalized::F(p) | Normalized::G(p) => {
                let s = eval_g(p, z, DEFAULT_TOL)?;
                let zg = z * s.derivative;
                if s.value.norm() < 1e-13 * (s.value.norm() + zg.norm()) {
                    return Err(pole);
                }
                let q = zg / s.value;
                match self {
                    Normalized::G(_) => Ok((s.value, q)),
                    _ => {
                        let l1 = p.l + 1.0;
                        let h = z * ((s.value / z).ln() / l1).exp();
                        Ok((h, (p.l + q) / l1))
                    }
                }
            }
            Normalized::Phi { nu, alpha } => {
                let j = eval_bessel_j(*nu, z)?;
                let zj = z * j.derivative;
                if j.value.norm() < 1e-13 * (j.value.norm() + zj.norm()) {
                    return Err(pole);
                }
                // z^(nu+alpha) S = 2^nu Gamma(nu+1) z^alpha J_nu
                let a = nu + alpha;
                let s = (j.value.ln() - (z / 2.0).ln() * *nu + libm::lgamma(nu + 1.0)).exp();
                let h = z * (s.ln() / a).exp();
                let q = 1.0 + (zj / j.value - *nu) / a;
                Ok((h, q))
            }
        }
    }

    /// Checks that `h` has no zero on `(0, r]` of the real axis (real
    /// parameters only).
    fn check_real_axis(&self, r: f64) -> Result<()> {
        let n = 64;
        match self {
            Normalized::F(p) | Normalized::G(p) if p.is_real() => {
                let mut axis = RealAxisG::new(p.l.re, p.eta)?;
                for i in 1..=n {
                    if !(axis.eval(r * i as f64 / n as f64)?.0 > 0.0) {
                        return Err(Error::GateViolation("requires r below the first zero of h"));
                    }
                }
            }
            Normalized::Phi { nu, .. } => {
                for i in 1..=n {
                    if !(bessel_reduced(*nu, r * i as f64 / n as f64)?.0 > 0.0) {
                        return Err(Error::GateViolation("requires r below the first zero of h"));
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Radius of starlikeness (real parameters).
    pub fn radius(&self) -> Result<f64> {
        Ok(match self {
            Normalized::F(p) => radius_f(p.real_order()?, p.eta, 0.0)?.value,
            Normalized::G(p) => radius_g(p.real_order()?, p.eta, 0.0)?.value,
            Normalized::Phi { nu, alpha } => radius_phi(*nu, *alpha, 0.0)?.value,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskScanReport {
    pub radius_scanned: f64,
    pub grid_size: usize,
    pub min_real_part: f64,
    pub argmin_angle: f64,
}

fn scan(h: &Normalized, r: f64, grid_size: usize, rot: Complex64, rings: usize) -> Result<DiskScanReport> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::GateViolation("requires r > 0"));
    }
    if grid_size < 256 {
        return Err(Error::GateViolation("requires grid_size >= 256"));
    }
    h.check()?;
    h.check_real_axis(r)?;
    let mut best = DiskScanReport { radius_scanned: r, grid_size, min_real_part: f64::INFINITY, argmin_angle: 0.0 };
    for ring in (1..=rings + 1).rev() {
        let rho = r * ring as f64 / (rings + 1) as f64;
        for j in 0..grid_size {
            let t = 2.0 * PI * j as f64 / grid_size as f64;
            let z = Complex64::from_polar(rho, t);
            let (_, q) = h.eval(z, t)?;
            let v = (rot * q).re;
            // ties go to the outer circle and the smaller angle
            if v < best.min_real_part {
                best.min_real_part = v;
                best.argmin_angle = t;
            }
        }
    }
    Ok(best)
}

/// Minimum of `Re(z h'/h)` over `grid_size` equally spaced points of
/// `|z| = r`, angles `2 pi j / grid_size`.
pub fn starlike_scan(h: &Normalized, r: f64, grid_size: usize) -> Result<DiskScanReport> {
    scan(h, r, grid_size, Complex64::new(1.0, 0.0), 0)
}

/// As `starlike_scan`, also sampling `interior_rings` concentric circles
/// inside. The reported minimum covers every sampled point.
pub fn starlike_scan_interior(h: &Normalized, r: f64, grid_size: usize, interior_rings: usize) -> Result<DiskScanReport> {
    scan(h, r, grid_size, Complex64::new(1.0, 0.0), interior_rings)
}

/// `l > -1` with `l(l+1) = Re[L(L+1)]`. Both roots exceed -1 when
/// `Re L < -1/2`; the one on the same side of -1/2 as `Re L` is taken, so a
/// real `L` maps to itself.
pub fn companion_order(l: Complex64) -> Result<f64> {
    if l.im == 0.0 && l.re > -1.0 {
        return Ok(l.re);
    }
    let s = (l * (l + 1.0)).re;
    if !(1.0 + 4.0 * s > 0.0) {
        return Err(Error::GateViolation("requires Re[L(L+1)] > -1/4"));
    }
    let d = (s + 0.25).sqrt();
    Ok(if l.re >= -0.5 { -0.5 + d } else { -0.5 - d })
}

fn spiral_gates(family: Family, l: Complex64, eta: f64) -> Result<()> {
    if !(l.re > -1.0) {
        return Err(Error::GateViolation("requires Re L > -1"));
    }
    if !(eta <= 0.0) {
        return Err(Error::GateViolation("requires eta <= 0"));
    }
    match family {
        Family::FPower => {
            if !((l + 1.0).arg().abs() < PI / 4.0) {
                return Err(Error::GateViolation("requires |arg(L+1)| < pi/4"));
            }
        }
        Family::FShift => {
            let (x, y) = (l.re, l.im);
            if !(x < 1.0 && y * y < x * (x + 1.0) + 0.25) {
                return Err(Error::GateViolation("requires x < 1 and y^2 < x(x+1) + 1/4"));
            }
        }
        Family::BesselGen => return Err(Error::GateViolation("spirallike scan covers the f and g families")),
    }
    Ok(())
}

/// Minimum of `Re(e^(i theta) z h'/h)` on `|z| = r` for `h = f_{L,eta}`
/// or `g_{L,eta}` with complex `L`.
pub fn spirallike_scan(family: Family, l: Complex64, eta: f64, r: f64, theta: f64, grid_size: usize) -> Result<DiskScanReport> {
    spiral_gates(family, l, eta)?;
    let p = CoulombParams::complex(l, eta);
    let h = if family == Family::FPower { Normalized::F(p) } else { Normalized::G(p) };
    scan(&h, r, grid_size, Complex64::from_polar(1.0, theta), 0)
}

/// The radius below which the spirallike witness is expected: the first
/// zero of `F'_l` for `f`, of `r F'_l - (Re L) F_l` for `g`, at the
/// companion order `l`.
pub fn spirallike_radius(family: Family, l: Complex64, eta: f64) -> Result<f64> {
    spiral_gates(family, l, eta)?;
    let lc = companion_order(l)?;
    Ok(match family {
        Family::FPower => radius_f(lc, eta, 0.0)?.value,
        _ => coulomb_reduced_root(lc, eta, lc - l.re)?.value,
    })
}

/// `h(r e^(i t_j))`, `t_j = 2 pi j / (n - 1)`, so the first and last points
/// coincide.
pub fn boundary_image(h: &Normalized, r: f64, n_points: usize) -> Result<Vec<(f64, Complex64)>> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::GateViolation("requires r > 0"));
    }
    if n_points < 2 {
        return Err(Error::GateViolation("requires at least 2 points"));
    }
    h.check()?;
    h.check_real_axis(r)?;
    (0..n_points)
        .map(|j| {
            let t = 2.0 * PI * j as f64 / (n_points - 1) as f64;
            let (v, _) = h.eval(Complex64::from_polar(r, t), t)?;
            Ok((t, v))
        })
        .collect()
}

/// Which zeros a Rayleigh sum runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZerosOf {
    F,
    FPrime,
}

const SCAN_STEP: f64 = 0.25;

/// The first `n` positive zeros of `g` (or of `(L g + x g')/x`, whose zeros
/// are those of `F'`), by sign changes on a fixed grid and bisection.
pub fn enumerate_zeros(l: f64, eta: f64, which: ZerosOf, n: usize) -> Result<Vec<f64>> {
    let mut axis = RealAxisG::new(l, eta)?;
    let mut h = |x: f64| -> Result<f64> {
        let (g, dg) = axis.eval(x)?;
        Ok(match which {
            ZerosOf::F => g,
            ZerosOf::FPrime => (l * g + x * dg) / x,
        })
    };
    let mut zeros = Vec::with_capacity(n);
    let mut a = SCAN_STEP / 4.0;
    let mut fa = h(a)?;
    // spacing tends to pi; this bounds the search for the next zero
    let limit = 20.0 + 4.0 * (n as f64) * PI + 4.0 * eta.abs() * 10.0;
    while zeros.len() < n {
        let b = a + SCAN_STEP;
        if b > limit {
            return Err(Error::ZeroEnumerationIncomplete { index: zeros.len() });
        }
        let fb = h(b)?;
        if fa == 0.0 {
            zeros.push(a);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            let (mut lo, mut hi, mut flo) = (a, b, fa);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = h(mid)?;
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zeros.push(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    check_spacing(&zeros)?;
    Ok(zeros)
}

/// Consecutive spacings must stay within a factor (0.7, 1.4) of each other;
/// a larger jump means a pair of zeros fell between two grid points.
fn check_spacing(zeros: &[f64]) -> Result<()> {
    for i in 2..zeros.len() {
        let d0 = zeros[i - 1] - zeros[i - 2];
        let d1 = zeros[i] - zeros[i - 1];
        let q = d1 / d0;
        if !(q > 0.7 && q < 1.4) {
            return Err(Error::ZeroEnumerationIncomplete { index: i });
        }
    }
    Ok(())
}

/// `sum_{x > R} x^-p` for zeros with local density `k(x)/pi`,
/// `k = sqrt(1 - 2 eta/x - L(L+1)/x^2)`. With `x = R/t`:
/// `R^(1-p)/pi * int_0^1 k(R/t) t^(p-2) dt` (Simpson).
fn tail_integral(l: f64, eta: f64, r: f64, p: i32) -> f64 {
    let k = |x: f64| (1.0 - 2.0 * eta / x - l * (l + 1.0) / (x * x)).max(0.0).sqrt();
    let f = |t: f64| if t == 0.0 { if p == 2 { 1.0 } else { 0.0 } } else { k(r / t) * t.powi(p - 2) };
    let n = 400;
    let h = 1.0 / n as f64;
    let mut s = f(0.0) + f(1.0);
    for i in 1..n {
        s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    r.powi(1 - p) / PI * s * h / 3.0
}

fn side_sum(l: f64, eta: f64, which: ZerosOf, k: i32, n: usize, tail: bool) -> Result<f64> {
    let zeros = enumerate_zeros(l, eta, which, n)?;
    // smallest terms first
    let mut s: f64 = zeros.iter().rev().map(|x| x.powi(-k)).sum();
    if tail {
        let last = *zeros.last().unwrap();
        let kx = (1.0 - 2.0 * eta / last - l * (l + 1.0) / (last * last)).max(1e-3).sqrt();
        s += tail_integral(l, eta, last + PI / (2.0 * kx), k);
    }
    Ok(s)
}

/// `sum rho^-k` over the real zeros of `F` (or `F'`), `n_zeros` on each
/// side of the origin. Zeros on the negative axis are the reflected zeros
/// at `-eta`: `g_eta(-x) = -g_{-eta}(x)`.
pub fn zero_sum_oracle(params: &CoulombParams, which: ZerosOf, k: u32, n_zeros: usize, tail: bool) -> Result<f64> {
    let l = params.radius_gate()?;
    if k != 2 && k != 4 {
        return Err(Error::GateViolation("requires k in {2, 4}"));
    }
    if n_zeros == 0 || n_zeros > 500 {
        return Err(Error::GateViolation("requires 1 <= n_zeros <= 500"));
    }
    let eta = params.eta;
    let pos = side_sum(l, eta, which, k as i32, n_zeros, tail)?;
    let neg = side_sum(l, -eta, which, k as i32, n_zeros, tail)?;
    Ok(pos + neg)
}

/// `sum lambda_n^-2` over the positive zeros of `z J_nu' + H J_nu`:
/// `(nu + 2 + H) / (4 (nu+1)(nu+H))`.
pub fn dini_rayleigh_oracle(nu: &BigRational, h: &BigRational) -> Result<BigRational> {
    let one = BigRational::from_integer(1.into());
    let minus_one = -one.clone();
    if !(nu > &minus_one) {
        return Err(Error::GateViolation("requires nu > -1"));
    }
    let nh = nu + h;
    if !nh.is_positive() {
        return Err(Error::GateViolation("requires nu + H > 0"));
    }
    let two = &one + &one;
    let four = &two + &two;
    let den = four * (nu + &one) * &nh;
    debug_assert!(!den.is_zero());
    Ok((nu + two + h) / den)
}
