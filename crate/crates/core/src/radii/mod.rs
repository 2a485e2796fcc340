//! Radii of starlikeness of order `beta` as first positive roots of
//! prefactor-free ("reduced") forms of the defining equations:
//!
//! * `f = (z^L g)^(1/(L+1))`: `(r g' + (L - beta (L+1)) g) / r`,
//! * `g`:                     `(r g' - beta g) / r`,
//! * `phi` (generalized Bessel): `(nu+alpha)(1-beta) S + r S'` with
//!   `J_nu(r) = (r/2)^nu S(r) / Gamma(nu+1)`.
//!
//! Each reduced form is positive at `0+`.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::params::CoulombParams;
use crate::rayleigh::euler_rayleigh_bounds;
use crate::specfun::{bessel_reduced, RealAxisG};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `f_{L,eta} = (z^L g)^(1/(L+1))`.
    FPower,
    /// `g_{L,eta} = z^-L F / C_L`.
    FShift,
    /// `phi_{nu,alpha} = (2^nu Gamma(nu+1) z^alpha J_nu)^(1/(nu+alpha))`.
    BesselGen,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RootFlags {
    /// The function touches zero (a double root or a near miss).
    pub near_double_root: bool,
    /// The root lies within ten scan steps of the origin.
    pub close_to_origin: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    pub value: f64,
    pub bracket: (f64, f64),
    /// The reduced form at `value`.
    pub residual: f64,
    /// Size of the terms of the reduced form near the root.
    pub scale: f64,
    pub iterations: usize,
    pub flags: RootFlags,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub step: f64,
    pub ceiling: f64,
    /// Past this point the step grows geometrically up to `max_step`.
    pub grow_after: f64,
    pub max_step: f64,
    /// Relative bracket width at which refinement stops.
    pub tol: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { step: 0.05, ceiling: 100.0, grow_after: 10.0, max_step: 0.5, tol: 1e-14 }
    }
}

impl ScanOptions {
    pub fn with_ceiling(ceiling: f64) -> Self {
        ScanOptions { ceiling, ..Self::default() }
    }
}

const GROWTH: f64 = 1.05;

/// First sign change of `f` on `(0, ceiling]`. `f` returns the function
/// value and the size of its terms (for the residual test) and must be
/// positive near `0+`.
pub fn smallest_positive_root<F>(mut f: F, opts: &ScanOptions) -> Result<RadiusResult>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    if !(opts.tol >= 1e-15) || !(opts.step > 0.0) {
        return Err(Error::GateViolation("requires tol >= 1e-15 and a positive step"));
    }
    let mut flags = RootFlags::default();
    let mut iterations = 0usize;
    let mut eval = |r: f64, it: &mut usize| -> Result<(f64, f64)> {
        *it += 1;
        let (v, s) = f(r)?;
        if v.is_nan() {
            return Err(Error::NonMonotoneBracket);
        }
        Ok((v, s))
    };

    let mut h = opts.step;
    let (mut lo, mut hi);
    let (mut f_lo, mut f_hi);
    let (v0, _) = eval(h, &mut iterations)?;
    if v0 <= 0.0 {
        // the root is below the first step: walk towards the origin
        flags.close_to_origin = true;
        hi = h;
        f_hi = v0;
        let mut r = h;
        loop {
            r *= 0.5;
            if r < 1e-300 {
                return Err(Error::NoRootInScanRange { ceiling: opts.ceiling });
            }
            let (v, _) = eval(r, &mut iterations)?;
            if v > 0.0 {
                lo = r;
                f_lo = v;
                break;
            }
            hi = r;
            f_hi = v;
        }
    } else {
        let mut prev = (0.0, f64::INFINITY);
        let mut cur = (h, v0);
        loop {
            if cur.0 > opts.grow_after {
                h = (h * GROWTH).min(opts.max_step.max(opts.step));
            }
            let r = cur.0 + h;
            if r > opts.ceiling {
                return Err(Error::NoRootInScanRange { ceiling: opts.ceiling });
            }
            let (v, s) = eval(r, &mut iterations)?;
            if v <= 0.0 {
                lo = cur.0;
                f_lo = cur.1;
                hi = r;
                f_hi = v;
                break;
            }
            // a dip between samples that may touch zero without a sign change
            if prev.1.is_finite() && cur.1 < prev.1 && cur.1 < v {
                if let Some(res) = touch_point(&mut eval, prev.0, r, s, &mut iterations)? {
                    if res.1 <= 0.0 {
                        lo = prev.0;
                        f_lo = prev.1;
                        hi = res.0;
                        f_hi = res.1;
                        break;
                    }
                    flags.near_double_root = true;
                    return Ok(RadiusResult {
                        value: res.0,
                        bracket: (prev.0, r),
                        residual: res.1,
                        scale: s,
                        iterations,
                        flags,
                    });
                }
            }
            prev = cur;
            cur = (r, v);
        }
        if hi < 10.0 * opts.step {
            flags.close_to_origin = true;
        }
    }

    let _ = f_hi;
    while hi - lo > opts.tol * (1.0 + lo) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (v, _) = eval(mid, &mut iterations)?;
        if v > 0.0 {
            lo = mid;
            f_lo = v;
        } else {
            hi = mid;
            f_hi = v;
        }
    }
    let value = if f_lo > 0.0 && f_hi < 0.0 {
        lo - f_lo * (hi - lo) / (f_hi - f_lo)
    } else {
        hi
    };
    if !(value >= lo && value <= hi) {
        return Err(Error::NonMonotoneBracket);
    }
    let (residual, scale) = eval(value, &mut iterations)?;

    // equal signs on both sides mean the function only touches zero here
    let d = 1e-6 * (1.0 + value);
    if value - d > 0.0 {
        let (a, _) = eval(value - d, &mut iterations)?;
        let (b, _) = eval(value + d, &mut iterations)?;
        if a.signum() == b.signum() {
            flags.near_double_root = true;
            return Ok(RadiusResult {
                value,
                bracket: (lo, hi),
                residual: residual.abs().max(a.abs()).max(b.abs()),
                scale,
                iterations,
                flags,
            });
        }
    }
    Ok(RadiusResult { value, bracket: (lo, hi), residual, scale, iterations, flags })
}

/// Ternary search for the minimum of `f` on `[a, b]`; reports it when the
/// minimum is within `1e-10` of zero relative to `scale`.
fn touch_point<E>(eval: &mut E, mut a: f64, mut b: f64, scale: f64, it: &mut usize) -> Result<Option<(f64, f64)>>
where
    E: FnMut(f64, &mut usize) -> Result<(f64, f64)>,
{
    for _ in 0..100 {
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        let (v1, _) = eval(m1, it)?;
        if v1 <= 0.0 {
            return Ok(Some((m1, v1)));
        }
        let (v2, _) = eval(m2, it)?;
        if v2 <= 0.0 {
            return Ok(Some((m2, v2)));
        }
        if v1 < v2 {
            b = m2;
        } else {
            a = m1;
        }
        if b - a < 1e-15 * (1.0 + a) {
            break;
        }
    }
    let m = 0.5 * (a + b);
    let (v, _) = eval(m, it)?;
    Ok(if v <= 1e-10 * scale { Some((m, v)) } else { None })
}

fn check_beta(beta: f64) -> Result<()> {
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::GateViolation("requires 0 <= beta < 1"));
    }
    Ok(())
}

/// Scan settings for the Coulomb families: Euler-Rayleigh guided when
/// `beta = 0` (the bounds are about the zeros of `F'`), otherwise the
/// defaults.
pub fn coulomb_scan_options(l: f64, eta: f64, beta: f64) -> ScanOptions {
    if beta == 0.0 && l != 0.0 {
        if let Ok(b) = euler_rayleigh_bounds(&CoulombParams::new(l, eta), 1) {
            return ScanOptions {
                step: (0.05 * b.lower.sqrt()).min(0.1),
                ceiling: b.upper.sqrt() + 10.0,
                ..ScanOptions::default()
            };
        }
    }
    ScanOptions::default()
}

fn coulomb_radius(l: f64, eta: f64, c: f64, opts: &ScanOptions) -> Result<RadiusResult> {
    let mut axis = RealAxisG::new(l, eta)?;
    smallest_positive_root(
        |r| {
            let (g, dg) = axis.eval(r)?;
            Ok(((r * dg + c * g) / r, ((r * dg).abs() + (c * g).abs()) / r))
        },
        opts,
    )
}

/// Radius of starlikeness of order `beta` of `f_{L,eta}`.
pub fn radius_f(l: f64, eta: f64, beta: f64) -> Result<RadiusResult> {
    CoulombParams::new(l, eta).radius_gate()?;
    check_beta(beta)?;
    radius_f_with(l, eta, beta, &coulomb_scan_options(l, eta, beta))
}

pub fn radius_f_with(l: f64, eta: f64, beta: f64, opts: &ScanOptions) -> Result<RadiusResult> {
    CoulombParams::new(l, eta).radius_gate()?;
    check_beta(beta)?;
    coulomb_radius(l, eta, l - beta * (l + 1.0), opts)
}

/// First positive root of `r g' + c g` for real `L > -1`, `eta <= 0`.
pub fn coulomb_reduced_root(l: f64, eta: f64, c: f64) -> Result<RadiusResult> {
    CoulombParams::new(l, eta).radius_gate()?;
    coulomb_radius(l, eta, c, &ScanOptions::default())
}

/// Radius of starlikeness of order `beta` of `g_{L,eta}`.
pub fn radius_g(l: f64, eta: f64, beta: f64) -> Result<RadiusResult> {
    radius_g_with(l, eta, beta, &ScanOptions::default())
}

pub fn radius_g_with(l: f64, eta: f64, beta: f64, opts: &ScanOptions) -> Result<RadiusResult> {
    CoulombParams::new(l, eta).radius_gate()?;
    check_beta(beta)?;
    coulomb_radius(l, eta, -beta, opts)
}

/// Radius of starlikeness of order `beta` of `phi_{nu,alpha}`.
pub fn radius_phi(nu: f64, alpha: f64, beta: f64) -> Result<RadiusResult> {
    radius_phi_with(nu, alpha, beta, &ScanOptions::default())
}

pub fn radius_phi_with(nu: f64, alpha: f64, beta: f64, opts: &ScanOptions) -> Result<RadiusResult> {
    if !(nu > 0.0) {
        return Err(Error::GateViolation("requires nu > 0"));
    }
    if !(nu + alpha > 0.0) {
        return Err(Error::GateViolation("requires nu + alpha > 0"));
    }
    check_beta(beta)?;
    let c = (nu + alpha) * (1.0 - beta);
    smallest_positive_root(
        |r| {
            let (s, ds, _) = bessel_reduced(nu, r)?;
            Ok((c * s + ds, (c * s).abs() + ds.abs()))
        },
        opts,
    )
}
