//! Large-`L` expansion of the radius of starlikeness of `f_{L,eta}`:
//! `r* ~ L (c + sum_k eps_k / L^k)`, with `eps_k` exact polynomials in `eta`
//! over Q(sqrt 2).
//!
//! With `u = 1/L` and `E = c + sum eps_k u^k` the defining identity reads
//!
//! ```text
//! 1 = (1+u)^-1 [ sum_m u^(m-1) E^(m+1) S_2m + sum_m u^(m+1) E^(m+1) S_(2m+1) ]
//!     - eta u E (1+u)^-2
//! ```
//!
//! where `S_k = sum_n zeta_n^(k) u^n` are the Laurent series of the Rayleigh
//! sums. The coefficients are produced by solving it order by order.

use alloc::vec::Vec;

use num_rational::BigRational;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::exact::{potential_polynomials, EtaPolynomial, Field, Ring, Sqrt2Rational, ToF64, TruncatedSeries};
use crate::radii::radius_f;
use crate::rayleigh::ZetaTable;

/// Polynomials in `eta` over Q(sqrt 2).
pub type Coeff = EtaPolynomial<Sqrt2Rational>;

/// `c` and `eps_1..eps_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonTable {
    pub c: Sqrt2Rational,
    eps: Vec<Coeff>,
}

impl EpsilonTable {
    /// Builds a table from explicit coefficients, `eps[0]` being `eps_1`.
    pub fn from_parts(c: Sqrt2Rational, eps: Vec<Coeff>) -> Self {
        EpsilonTable { c, eps }
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eps.is_empty()
    }

    /// `eps_k` for `1 <= k <= len`.
    pub fn get(&self, k: usize) -> Option<&Coeff> {
        k.checked_sub(1).and_then(|i| self.eps.get(i))
    }

    pub fn eps(&self) -> &[Coeff] {
        &self.eps
    }

    /// `E(u) = c + sum eps_k u^k`, truncated at `u^order`.
    pub fn series(&self, order: i64) -> TruncatedSeries<Coeff> {
        let mut v = Vec::with_capacity(self.eps.len() + 1);
        v.push(Coeff::constant(self.c.clone()));
        v.extend(self.eps.iter().cloned());
        TruncatedSeries::new(0, v, order)
    }
}

fn lift(p: &EtaPolynomial<BigRational>) -> Coeff {
    p.map(|c| Sqrt2Rational::rational(c.clone()))
}

fn zeta_series(t: &ZetaTable, k: usize, order: i64) -> TruncatedSeries<Coeff> {
    let n = (order.max(0) as usize).min(t.n_max() + 1);
    let v = (0..n).map(|i| lift(t.get(k, i))).collect();
    TruncatedSeries::new(0, v, order)
}

/// The right side minus the left side of the defining identity, with `E`
/// built from `table`, as a series in `u` known through `u^(order-1)`.
///
/// All coefficients vanish when `table` is a correct expansion of length
/// `order - 1`.
pub fn main_eqn_residual(table: &EpsilonTable, order: i64) -> TruncatedSeries<Coeff> {
    let n = order.max(1) as usize;
    let zt = ZetaTable::new(2 * n + 2, n);
    main_eqn_residual_with(table, order, &zt)
}

fn main_eqn_residual_with(table: &EpsilonTable, order: i64, zt: &ZetaTable) -> TruncatedSeries<Coeff> {
    let n = order.max(1) as usize;
    let e = table.series(order);
    let inv = TruncatedSeries::<Coeff>::inverse_one_plus(order);
    let eta = Coeff::eta();

    let mut bracket = TruncatedSeries::zero(order);
    let mut e_pow = e.mul(&e);
    // u^(m-1) lowers the order by m-1, so m <= order is enough for the even
    // sums and m <= order - 2 for the odd ones.
    for m in 1..=n {
        let even = e_pow.mul(&zeta_series(zt, 2 * m, order)).shift(m as i64 - 1);
        bracket = bracket.add(&even.truncate(order));
        if m + 1 < n {
            let odd = e_pow.mul(&zeta_series(zt, 2 * m + 1, order)).shift(m as i64 + 1);
            bracket = bracket.add(&odd.truncate(order));
        }
        e_pow = e_pow.mul(&e);
    }
    let potential = e.shift(1).scale(&eta).mul(&inv).mul(&inv);
    bracket.mul(&inv).sub(&potential.truncate(order)).sub(&TruncatedSeries::one(order))
}

/// `c = sqrt 2` and `eps_1..eps_n`, solved order by order from the defining
/// identity. The coefficient of `u^N` is `2 c zeta_0^(2) eps_N + (known)`.
pub fn epsilon_coeffs(n: usize) -> EpsilonTable {
    let zt = ZetaTable::new(2 * n + 4, n + 2);
    let c = Sqrt2Rational::sqrt2();
    let zeta0 = lift(zt.get(2, 0));
    assert_eq!(
        zeta0.times(&Coeff::constant(c.times(&c))),
        Coeff::one(),
        "leading balance c^2 zeta_0 = 1"
    );
    let pivot = Coeff::constant(c.plus(&c)).times(&zeta0);
    let pivot_inv = pivot.coeff(0).inverse().expect("2 c zeta_0 is nonzero");

    let mut table = EpsilonTable { c, eps: Vec::with_capacity(n) };
    for k in 1..=n {
        let r = main_eqn_residual_with(&table, k as i64 + 1, &zt);
        let rk = r.coeff(k as i64).expect("order covers u^k");
        table.eps.push(rk.scale(&pivot_inv).negated());
    }
    table
}

/// `eps_1..eps_n` from the recurrence exactly as it is printed: the seed
/// `2 c zeta_0 eps_1 = c eta - c^2 (zeta_1 - zeta_0) - zeta_0^(4) A_{3,0}`
/// and the explicit formula for `eps_(n+2)`, with `A_{m+1,k}` the potential
/// polynomials of `(eps_1, eps_2, ...)`.
///
/// Kept for comparison. Its output does not annihilate the defining identity.
pub fn epsilon_coeffs_as_printed(n: usize) -> EpsilonTable {
    let zt = ZetaTable::new(2 * n + 4, n + 2);
    let c = Sqrt2Rational::sqrt2();
    let cc = Coeff::constant(c.clone());
    let c2 = cc.times(&cc);
    let eta = Coeff::eta();
    let z = |k: usize, i: usize| lift(zt.get(k, i));
    let sgn = |p: Coeff, e: i64| if e.rem_euclid(2) == 0 { p } else { p.negated() };
    let int = |v: i64| Coeff::from_i64(v);
    let pivot = cc.plus(&cc).times(&z(2, 0)).coeff(0).inverse().expect("nonzero");

    let mut eps: Vec<Coeff> = Vec::with_capacity(n);
    if n == 0 {
        return EpsilonTable { c, eps };
    }
    let seed = cc
        .times(&eta)
        .minus(&c2.times(&z(2, 1).minus(&z(2, 0))))
        .minus(&z(4, 0));
    eps.push(seed.scale(&pivot));

    let a = |eps: &[Coeff], m1: u32, k: usize| -> Coeff {
        potential_polynomials(m1, eps, k)[k].clone()
    };
    while eps.len() < n {
        let nn = eps.len() - 1;
        let ni = nn as i64;
        let e = |i: usize| eps[i - 1].clone();
        let mut rhs = Coeff::zero();

        let mut s = Coeff::zero();
        for k in 0..=nn {
            let mut inner = Coeff::zero();
            for q in 0..=nn - k + 1 {
                inner = inner.plus(&sgn(z(2, q), ni - k as i64 - q as i64 + 1));
            }
            s = s.plus(&e(k + 1).times(&inner));
        }
        rhs = rhs.minus(&cc.plus(&cc).times(&s));

        let mut s = Coeff::zero();
        for k in 0..=nn {
            s = s.plus(&sgn(int(ni - k as i64).times(&e(k + 1)), ni - k as i64 + 1));
        }
        rhs = rhs.plus(&eta.times(&s));

        let mut s = Coeff::zero();
        for k in 0..=nn + 2 {
            s = s.plus(&sgn(z(2, k), ni - k as i64 + 1));
        }
        rhs = rhs.plus(&c2.times(&s));

        for j in 0..=nn {
            let mut zs = Coeff::zero();
            for k in 0..=nn - j {
                zs = zs.plus(&sgn(z(2, k), (nn - j - k) as i64));
            }
            let mut es = Coeff::zero();
            for l in 0..=j {
                es = es.plus(&e(l + 1).times(&e(j - l + 1)));
            }
            rhs = rhs.minus(&zs.times(&es));
        }

        for j in 0..=nn + 1 {
            let mut s = Coeff::zero();
            for m in 2..=j + 2 {
                for k in 0..=j + 2 - m {
                    s = s.plus(&z(2 * m, j + 2 - m - k).times(&a(&eps, m as u32 + 1, k)));
                }
            }
            rhs = rhs.plus(&sgn(s, ni - j as i64));
        }

        rhs = rhs.plus(&sgn(cc.times(&eta).times(&int(ni + 2)), ni + 1));

        for j in 0..=nn {
            let mut s = Coeff::zero();
            for m in 1..=j + 1 {
                for k in 0..=j + 1 - m {
                    s = s.plus(&z(2 * m + 1, j + 1 - m - k).times(&a(&eps, m as u32 + 1, k)));
                }
            }
            rhs = rhs.plus(&sgn(s, ni - j as i64 + 1));
        }

        eps.push(rhs.scale(&pivot));
    }
    EpsilonTable { c, eps }
}

/// `L (c + sum_{k<=n} eps_k(eta) / L^k)`.
pub fn radius_asymptotic_with(table: &EpsilonTable, l: f64, eta: f64, n: usize) -> Result<f64> {
    if !(l > 0.0) {
        return Err(Error::GateViolation("requires L > 0"));
    }
    if n > table.len() {
        return Err(Error::GateViolation("N exceeds the coefficient table"));
    }
    let u = 1.0 / l;
    let mut s = 0.0;
    for k in (1..=n).rev() {
        s = (s + table.eps[k - 1].eval_f64(eta)) * u;
    }
    Ok(l * (table.c.to_f64() + s))
}

pub fn radius_asymptotic(l: f64, eta: f64, n: usize) -> Result<f64> {
    radius_asymptotic_with(&epsilon_coeffs(n), l, eta, n)
}

/// Least-squares fit of `log(err)` against `log L`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderFit {
    pub slope: f64,
    /// Root-mean-square deviation of the points from the fitted line.
    pub residual: f64,
    /// `(L, |r*_direct - r*_asym| / L)`.
    pub errors: Vec<(f64, f64)>,
}

/// Slope of the scaled error `|r* - r*_asym(N)| / L` against `L` on a
/// log-log scale, with `r*` the directly computed first zero of `F'`.
pub fn empirical_order(l_grid: &[f64], eta: f64, n: usize) -> Result<OrderFit> {
    if l_grid.len() < 3 || l_grid.windows(2).any(|w| !(w[0] < w[1])) || !(l_grid[0] > 0.0) {
        return Err(Error::GateViolation("requires an ascending grid of at least 3 positive L"));
    }
    let table = epsilon_coeffs(n);
    let mut errors = Vec::with_capacity(l_grid.len());
    for &l in l_grid {
        let direct = radius_f(l, eta, 0.0)?.value;
        let asym = radius_asymptotic_with(&table, l, eta, n)?;
        let err = (direct - asym).abs() / l;
        if !(err > 1e-15) {
            return Err(Error::DegenerateFit);
        }
        errors.push((l, err));
    }
    let (slope, residual) = fit_line(&errors);
    Ok(OrderFit { slope, residual, errors })
}

fn fit_line(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let ss: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - my - slope * (x - mx)).powi(2)).sum();
    (slope, (ss / n).sqrt())
}

#[cfg(test)]
mod tests;
