//! Taylor-series continuation of `g` along a ray from the origin.
//!
//! `g` solves `z^2 g'' + 2L z g' + (z^2 - 2 eta z - 2L) g = 0`. Around a
//! point `x0` the coefficients of `g(x0 + t) = sum c_k t^k` follow from
//! matching powers of `t`; the only singularity is at 0, so a step of a
//! quarter of `|x0|` (at most 1) needs a few dozen terms.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::dd::{DdScalar, EPS};
use crate::error::{Error, Result};

const MAX_ORDER: usize = 64;
const STEP_TOL: f64 = 1e-32;
const MAX_STEP: f64 = 1.0;

#[derive(Debug, Clone)]
struct Node<T> {
    /// Distance from the origin along the ray.
    r: f64,
    /// Length of the step for which `coeffs` is valid.
    h: f64,
    coeffs: Vec<T>,
}

/// Lazily built chain of local Taylor expansions along `r * dir`, `r >= r0`.
#[derive(Debug, Clone)]
pub struct RaySweep<T> {
    l: T,
    eta: T,
    dir: T,
    nodes: Vec<Node<T>>,
    /// Relative error carried in from the starting values.
    start_err: f64,
    /// Accumulated relative error per node (prefix sums).
    step_err: Vec<f64>,
    terms: usize,
}

fn horner<T: DdScalar>(c: &[T], t: T) -> (T, T) {
    let mut v = T::zero();
    let mut d = T::zero();
    for (k, ck) in c.iter().enumerate().rev() {
        v = v * t + *ck;
        if k > 0 {
            d = d * t + ck.scale(k as f64);
        }
    }
    (v, d)
}

impl<T: DdScalar> RaySweep<T> {
    /// Starts at `x0 = r0 * dir` with `g(x0) = g0`, `g'(x0) = dg0` known to
    /// relative accuracy `start_err`. `dir` must have unit modulus.
    pub fn new(l: T, eta: f64, dir: T, r0: f64, g0: T, dg0: T, start_err: f64) -> Self {
        let mut s = RaySweep {
            l,
            eta: T::from_f64(eta),
            dir,
            nodes: Vec::new(),
            start_err,
            step_err: Vec::new(),
            terms: 0,
        };
        s.nodes.push(Node { r: r0, h: 0.0, coeffs: alloc::vec![g0, dg0] });
        s
    }

    pub fn start(&self) -> f64 {
        self.nodes[0].r
    }

    /// Total number of Taylor coefficients generated so far.
    pub fn terms(&self) -> usize {
        self.terms
    }

    /// Distance covered so far.
    pub fn reach(&self) -> f64 {
        let n = self.nodes.last().unwrap();
        n.r + n.h
    }

    /// Node boundaries, usable as a sampling grid for sign changes.
    pub fn breakpoints(&self) -> impl Iterator<Item = f64> + '_ {
        self.nodes.iter().map(|n| n.r)
    }

    fn expand(&mut self) -> Result<()> {
        let last = self.nodes.last().unwrap();
        let (g0, dg0) = if last.h == 0.0 {
            (last.coeffs[0], last.coeffs[1])
        } else {
            horner(&last.coeffs, self.dir.scale(last.h))
        };
        let r0 = last.r + last.h;
        let x0 = self.dir.scale(r0);
        let l = self.l;
        let eta = self.eta;
        let x02 = x0 * x0;
        let base = x02 - (eta * x0).scale(2.0) - l.scale(2.0);
        let lin = (x0 - eta).scale(2.0);
        let mut c: Vec<T> = alloc::vec![g0, dg0];
        let mut h = (0.25 * r0).min(MAX_STEP);
        let mut scale = g0.magnitude().max(dg0.magnitude() * h);
        let mut small = 0usize;
        let mut k = 0usize;
        loop {
            // c_{k+2} from c_{k+1}, c_k, c_{k-1}, c_{k-2}
            let kf = k as f64;
            let mut acc = (x0.scale(2.0 * kf * (kf + 1.0)) + (l * x0).scale(2.0 * (kf + 1.0))) * c[k + 1];
            acc = acc + (base + T::from_f64(kf * (kf - 1.0)) + l.scale(2.0 * kf)) * c[k];
            if k >= 1 {
                acc = acc + lin * c[k - 1];
            }
            if k >= 2 {
                acc = acc + c[k - 2];
            }
            let next = -(acc / x02.scale((kf + 1.0) * (kf + 2.0)));
            c.push(next);
            k += 1;
            let m = next.magnitude() * h.powi(k as i32 + 1);
            scale = scale.max(m);
            if m <= STEP_TOL * scale {
                small += 1;
                if small >= 3 {
                    break;
                }
            } else {
                small = 0;
            }
            if c.len() >= MAX_ORDER {
                // shrink the step until the last terms are negligible
                let tail_ok = |h: f64| {
                    let sc = c.iter().enumerate().map(|(j, cj)| cj.magnitude() * h.powi(j as i32)).fold(0.0, f64::max);
                    c[c.len() - 3..].iter().enumerate().all(|(j, cj)| {
                        cj.magnitude() * h.powi((c.len() - 3 + j) as i32) <= STEP_TOL * sc
                    })
                };
                while !tail_ok(h) {
                    h *= 0.5;
                    if h < 1e-6 * r0 {
                        return Err(Error::NonConvergence { terms: self.terms });
                    }
                }
                break;
            }
        }
        self.terms += c.len();
        let prev = self.step_err.last().copied().unwrap_or(0.0);
        self.step_err.push(prev + STEP_TOL + 4.0 * c.len() as f64 * EPS);
        let first = self.nodes.len() == 1 && self.nodes[0].h == 0.0;
        if first {
            self.nodes[0] = Node { r: r0, h, coeffs: c };
        } else {
            self.nodes.push(Node { r: r0, h, coeffs: c });
        }
        Ok(())
    }

    /// Extends the chain so that it covers `r`.
    pub fn extend_to(&mut self, r: f64) -> Result<()> {
        if self.nodes[0].h == 0.0 {
            self.expand()?;
        }
        while self.reach() < r {
            self.expand()?;
        }
        Ok(())
    }

    /// `(g, g', relative error estimate)` at `r * dir`, `r >= start`.
    pub fn eval(&mut self, r: f64) -> Result<(T, T, f64)> {
        debug_assert!(r >= self.start());
        self.extend_to(r)?;
        let i = match self.nodes.binary_search_by(|n| n.r.partial_cmp(&r).unwrap()) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let node = &self.nodes[i];
        let (v, d) = horner(&node.coeffs, self.dir.scale(r - node.r));
        Ok((v, d, self.start_err + self.step_err[i]))
    }
}
