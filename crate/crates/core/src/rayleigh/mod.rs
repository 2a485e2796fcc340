//! Rayleigh sums `Z^(k) = sum rho^-k` over the zeros of `F` and `Z~^(k)` over
//! the zeros of `F'`, their recurrences, the Laurent coefficients of
//! `Z^(k)` in `1/L`, and the Euler-Rayleigh bounds on the first zero of `F'`.

use alloc::vec::Vec;

use num_rational::BigRational;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::exact::{p_coeff, rational_from_f64, EtaPolynomial, Field, Ring, ToF64};
use crate::params::CoulombParams;

/// `Z^(k)` (or `Z~^(k)`) for `k = 2..=k_max` at fixed `(L, eta)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RayleighTable<F> {
    pub l: F,
    pub eta: F,
    values: Vec<F>,
}

impl<F> RayleighTable<F> {
    pub fn k_max(&self) -> usize {
        self.values.len() + 1
    }

    pub fn get(&self, k: usize) -> Option<&F> {
        k.checked_sub(2).and_then(|i| self.values.get(i))
    }

    /// `(k, value)` pairs in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 2, v))
    }
}

fn div<F: Field>(a: &F, b: &F, what: &'static str) -> Result<F> {
    a.divide(b).ok_or(Error::DegenerateOrder(what))
}

fn real_gate(l: f64) -> Result<()> {
    if !(l > -1.0) {
        return Err(Error::GateViolation("requires L > -1"));
    }
    Ok(())
}

/// Sums over the zeros of `F`: `Z^(2) = (1 + eta^2/(L+1)^2)/(2L+3)` and
/// `(2L+k+2) Z^(k+1) = 2 eta/(L+1) Z^(k) + sum_{l=1}^{k-2} Z^(l+1) Z^(k-l)`.
pub fn rayleigh_z<F: Field>(l: &F, eta: &F, k_max: usize) -> Result<RayleighTable<F>> {
    let k_max = k_max.max(2);
    let one = F::one();
    let l1 = l.plus(&one);
    let two_l = l.plus(l);
    let q = div(eta, &l1, "L = -1")?;
    let z2 = div(&one.plus(&q.times(&q)), &two_l.plus(&F::from_i64(3)), "2L + 3 = 0")?;
    // z[i] holds Z^(i+2)
    let mut z = alloc::vec![z2];
    let two_q = q.plus(&q);
    for k in 2..k_max {
        let mut acc = two_q.times(&z[k - 2]);
        for j in 1..=k.saturating_sub(2) {
            acc = acc.plus(&z[j - 1].times(&z[k - j - 2]));
        }
        z.push(div(&acc, &two_l.plus(&F::from_i64(k as i64 + 2)), "2L + k + 2 = 0")?);
    }
    Ok(RayleighTable { l: l.clone(), eta: eta.clone(), values: z })
}

pub fn rayleigh_z_exact(l: &BigRational, eta: &BigRational, k_max: usize) -> Result<RayleighTable<BigRational>> {
    if *l <= BigRational::from_i64(-1) {
        return Err(Error::GateViolation("requires L > -1"));
    }
    rayleigh_z(l, eta, k_max)
}

/// Float mode, carried out in double-double and rounded at the end.
pub fn rayleigh_z_f64(params: &CoulombParams, k_max: usize) -> Result<RayleighTable<f64>> {
    let l = params.real_order()?;
    real_gate(l)?;
    Ok(rounded(rayleigh_z(&Dd::new(l), &Dd::new(params.eta), k_max)?))
}

fn rounded(t: RayleighTable<Dd>) -> RayleighTable<f64> {
    RayleighTable {
        l: t.l.to_f64(),
        eta: t.eta.to_f64(),
        values: t.values.iter().map(|v| v.to_f64()).collect(),
    }
}

/// Taylor coefficients of `2(x - eta)/(x^2 - 2 eta x - L(L+1)) = sum a_n x^n`.
pub fn gen_coeffs_a<F: Field>(l: &F, eta: &F, n_max: usize) -> Result<Vec<F>> {
    let d = l.times(&l.plus(&F::one())).negated();
    let two_eta = eta.plus(eta);
    let mut a = Vec::with_capacity(n_max + 1);
    a.push(div(&two_eta.negated(), &d, "L(L+1) = 0")?);
    if n_max >= 1 {
        a.push(div(&F::from_i64(2).plus(&two_eta.times(&a[0])), &d, "L(L+1) = 0")?);
    }
    for n in 2..=n_max {
        let num = two_eta.times(&a[n - 1]).minus(&a[n - 2]);
        a.push(div(&num, &d, "L(L+1) = 0")?);
    }
    Ok(a)
}

/// Sums over the zeros of `F'`. With `p = (L+2) eta/(L+1)^2`:
/// `(2L+3) Z~2 = 1 - L a1 - p a0 + p^2`,
/// `(2L+4) Z~3 = -L a2 - p a1 + a0 Z~2 - 2p Z~2`, and for `n >= 0`
/// `(2L+n+5) Z~(n+4) = -L a(n+3) - p a(n+2) + sum_{m<=n+1} a_m Z~(3+n-m)
///                     + sum_{m<=n} Z~(m+2) Z~(n-m+2) - 2p Z~(n+3)`.
pub fn rayleigh_ztilde<F: Field>(l: &F, eta: &F, k_max: usize) -> Result<RayleighTable<F>> {
    let k_max = k_max.max(2);
    let a = gen_coeffs_a(l, eta, k_max.max(3))?;
    let one = F::one();
    let l1 = l.plus(&one);
    let p = div(&l.plus(&F::from_i64(2)).times(eta), &l1.times(&l1), "L = -1")?;
    let two_p = p.plus(&p);
    let two_l = l.plus(l);
    let den = |c: i64| two_l.plus(&F::from_i64(c));

    // slot k holds Z~^(k); filled strictly bottom-up
    let mut zt: Vec<Option<F>> = alloc::vec![None; k_max + 1];
    let get = |zt: &Vec<Option<F>>, k: usize| -> F {
        zt[k].clone().unwrap_or_else(|| panic!("Z~^({}) used before it was computed", k))
    };

    let z2 = one.minus(&l.times(&a[1])).minus(&p.times(&a[0])).plus(&p.times(&p));
    zt[2] = Some(div(&z2, &den(3), "2L + 3 = 0")?);
    if k_max >= 3 {
        let z2 = get(&zt, 2);
        let num = l.times(&a[2]).negated().minus(&p.times(&a[1])).plus(&a[0].times(&z2)).minus(&two_p.times(&z2));
        zt[3] = Some(div(&num, &den(4), "2L + 4 = 0")?);
    }
    for k in 4..=k_max {
        let n = k - 4;
        let mut acc = l.times(&a[n + 3]).negated().minus(&p.times(&a[n + 2]));
        for m in 0..=n + 1 {
            acc = acc.plus(&a[m].times(&get(&zt, 3 + n - m)));
        }
        for m in 0..=n {
            acc = acc.plus(&get(&zt, m + 2).times(&get(&zt, n - m + 2)));
        }
        acc = acc.minus(&two_p.times(&get(&zt, n + 3)));
        zt[k] = Some(div(&acc, &den(n as i64 + 5), "2L + n + 5 = 0")?);
    }
    let values = zt.into_iter().skip(2).map(|v| v.unwrap()).collect();
    Ok(RayleighTable { l: l.clone(), eta: eta.clone(), values })
}

pub fn rayleigh_ztilde_exact(l: &BigRational, eta: &BigRational, k_max: usize) -> Result<RayleighTable<BigRational>> {
    if *l <= BigRational::from_i64(-1) {
        return Err(Error::GateViolation("requires L > -1"));
    }
    if Ring::is_zero(l) {
        return Err(Error::GateViolation("requires L != 0"));
    }
    rayleigh_ztilde(l, eta, k_max)
}

pub fn rayleigh_ztilde_f64(params: &CoulombParams, k_max: usize) -> Result<RayleighTable<f64>> {
    let l = params.real_order()?;
    real_gate(l)?;
    if l == 0.0 {
        return Err(Error::GateViolation("requires L != 0"));
    }
    Ok(rounded(rayleigh_ztilde(&Dd::new(l), &Dd::new(params.eta), k_max)?))
}

/// Two-sided bounds on the square of the first positive zero of `F'`:
/// `lower = (Z~^(2s))^(-1/s)` and `upper = Z~^(2s) / Z~^(2s+2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerRayleighBounds {
    pub s: u32,
    pub lower: f64,
    pub upper: f64,
}

fn exact_params(params: &CoulombParams) -> Result<(BigRational, BigRational)> {
    let l = params.radius_gate()?;
    if l == 0.0 {
        return Err(Error::GateViolation("requires L != 0"));
    }
    let lq = rational_from_f64(l).ok_or(Error::GateViolation("requires finite L"))?;
    let eq = rational_from_f64(params.eta).ok_or(Error::GateViolation("requires finite eta"))?;
    Ok((lq, eq))
}

fn bounds_from(zt: &RayleighTable<BigRational>, s: u32) -> Result<EulerRayleighBounds> {
    let lo = zt.get(2 * s as usize).unwrap();
    let hi = zt.get(2 * s as usize + 2).unwrap();
    if *lo <= Ring::zero() || *hi <= Ring::zero() {
        return Err(Error::BoundsInvalid { s });
    }
    let upper = lo.divide(hi).unwrap().to_f64();
    let lower = lo.to_f64().powf(-1.0 / s as f64);
    Ok(EulerRayleighBounds { s, lower, upper })
}

/// Bounds of order `s >= 1`. The sums are formed exactly from the binary
/// values of `L` and `eta`.
pub fn euler_rayleigh_bounds(params: &CoulombParams, s: u32) -> Result<EulerRayleighBounds> {
    if s == 0 {
        return Err(Error::GateViolation("requires s >= 1"));
    }
    let (l, eta) = exact_params(params)?;
    let zt = rayleigh_ztilde(&l, &eta, 2 * s as usize + 2)?;
    bounds_from(&zt, s)
}

/// Bounds for `s = 1..=s_max` from a single table.
pub fn euler_rayleigh_table(params: &CoulombParams, s_max: u32) -> Result<Vec<EulerRayleighBounds>> {
    let (l, eta) = exact_params(params)?;
    let zt = rayleigh_ztilde(&l, &eta, 2 * s_max as usize + 2)?;
    (1..=s_max).map(|s| bounds_from(&zt, s)).collect()
}

/// Laurent coefficients `zeta_n^(k)` as exact polynomials in `eta`, for
/// `2 <= k <= k_max`, `0 <= n <= n_max`:
/// `L^(k-1) Z^(k) ~ sum_n zeta_n^(k) / L^n` for even `k`, `L^k Z^(k)` for odd.
#[derive(Debug, Clone)]
pub struct ZetaTable {
    k_max: usize,
    n_max: usize,
    rows: Vec<Vec<EtaPolynomial<BigRational>>>,
}

type Poly = EtaPolynomial<BigRational>;

impl ZetaTable {
    pub fn new(k_max: usize, n_max: usize) -> Self {
        let k_max = k_max.max(3);
        let mut t = ZetaTable { k_max, n_max, rows: Vec::with_capacity(k_max - 1) };
        let eta = Poly::eta();
        let two_eta = eta.scale(&BigRational::from_i64(2));
        let eta2 = eta.times(&eta);
        let p = |alpha: usize, n: usize| Poly::constant(p_coeff(alpha as u32, n as u32));
        let sign = |m: usize| if m % 2 == 0 { 1 } else { -1 };

        let mut z2 = alloc::vec![p(2, 0), p(2, 1)];
        for n in 0..n_max.saturating_sub(1) {
            let mut v = p(2, n + 2);
            for m in 0..=n {
                let c = BigRational::from_i64(sign(m) * (m as i64 + 1));
                v = v.plus(&eta2.times(&p(2, n - m)).scale(&c));
            }
            z2.push(v);
        }
        z2.truncate(n_max + 1);
        t.rows.push(z2);

        // sum_{l<=n} sum_{m<=l} (-1)^m p^(alpha)_{l-m} x_{n-l}, times 2 eta
        let alt = |t: &ZetaTable, alpha: usize, k: usize, n: usize| -> Poly {
            let mut acc = Poly::zero();
            for l in 0..=n {
                for m in 0..=l {
                    let term = p(alpha, l - m).times(t.get(k, n - l));
                    acc = if sign(m) > 0 { acc.plus(&term) } else { acc.minus(&term) };
                }
            }
            two_eta.times(&acc)
        };
        // sum_{q<=n} sum_{m<=q} x^(a)_m y^(b)_{q-m} p^(alpha)_{n-q}
        let conv = |t: &ZetaTable, a: usize, b: usize, alpha: usize, n: usize| -> Poly {
            let mut acc = Poly::zero();
            for q in 0..=n {
                for m in 0..=q {
                    acc = acc.plus(&t.get(a, m).times(t.get(b, q - m)).times(&p(alpha, n - q)));
                }
            }
            acc
        };

        let z3 = (0..=n_max).map(|n| alt(&t, 3, 2, n)).collect();
        t.rows.push(z3);

        let mut k = 2;
        while 2 * k <= t.k_max {
            let even = 2 * k;
            let mut row = Vec::with_capacity(n_max + 1);
            for j in 0..=n_max {
                let mut v = Poly::zero();
                for l in 0..=k - 2 {
                    v = v.plus(&conv(&t, 2 * l + 2, even - 2 * l - 2, even, j));
                }
                if j >= 2 {
                    let n = j - 2;
                    for l in 1..=k.saturating_sub(2) {
                        v = v.plus(&conv(&t, 2 * l + 1, even - 2 * l - 1, even, n));
                    }
                    v = v.plus(&alt(&t, even, even - 1, n));
                }
                row.push(v);
            }
            t.rows.push(row);
            if even + 1 > t.k_max {
                break;
            }
            let odd = even + 1;
            let mut row = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                let mut v = alt(&t, odd, even, n);
                for l in 1..=k - 1 {
                    v = v.plus(&conv(&t, 2 * l + 1, even - 2 * l, odd, n));
                }
                for l in 0..=k - 2 {
                    v = v.plus(&conv(&t, 2 * l + 2, even - 2 * l - 1, odd, n));
                }
                row.push(v);
            }
            t.rows.push(row);
            k += 1;
        }
        t
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `zeta_n^(k)`. Panics outside the computed range.
    pub fn get(&self, k: usize, n: usize) -> &Poly {
        assert!(
            k >= 2 && k - 2 < self.rows.len() && n <= self.n_max,
            "zeta^({})_{} outside the table (k <= {}, n <= {})",
            k,
            n,
            self.k_max,
            self.n_max
        );
        &self.rows[k - 2][n]
    }

    pub fn row(&self, k: usize) -> &[Poly] {
        let _ = self.get(k, 0);
        &self.rows[k - 2]
    }
}

/// `zeta_0^(k) .. zeta_{n_max}^(k)`.
pub fn zeta_coeffs(k: usize, n_max: usize) -> Vec<Poly> {
    assert!(k >= 2, "zeta coefficients start at k = 2");
    ZetaTable::new(k, n_max).row(k).to_vec()
}

/// A Laurent evaluation, flagged when `L` is outside `L > k + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentValue {
    pub value: f64,
    pub outside_region: bool,
}

/// `Z^(k)` from the first `n_terms` Laurent coefficients.
pub fn zeta_laurent_eval(k: usize, params: &CoulombParams, n_terms: usize) -> Result<LaurentValue> {
    if k < 2 || n_terms == 0 {
        return Err(Error::GateViolation("requires k >= 2 and n_terms >= 1"));
    }
    let l = params.real_order()?;
    if l <= 0.0 {
        return Err(Error::GateViolation("requires L > 0"));
    }
    let row = zeta_coeffs(k, n_terms - 1);
    let offset = if k % 2 == 0 { k - 1 } else { k };
    let u = 1.0 / l;
    let s = row.iter().rev().fold(0.0, |acc, c| acc * u + c.eval_f64(params.eta));
    Ok(LaurentValue { value: s * u.powi(offset as i32), outside_region: l <= (k + 1) as f64 })
}

#[cfg(test)]
mod tests;
