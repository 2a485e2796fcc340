//! Power-series kernels in double-double arithmetic.

use num_complex::Complex64;

use crate::dd::{DdScalar, EPS};
use crate::error::{Error, Result};

/// A summed series with separate truncation and rounding estimates.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SeriesSum<T> {
    pub value: T,
    /// `z` times the derivative, which stays finite at `z = 0`.
    pub zderiv: T,
    pub terms: usize,
    pub trunc: f64,
    pub trunc_z: f64,
    pub round: f64,
    pub round_z: f64,
}

impl<T: DdScalar> SeriesSum<T> {
    /// `|g| + |z g'|`, the scale that the error estimates are judged against.
    pub fn envelope(&self) -> f64 {
        self.value.magnitude() + self.zderiv.magnitude()
    }

    pub fn error(&self) -> f64 {
        self.trunc + self.round
    }

    pub fn error_z(&self) -> f64 {
        self.trunc_z + self.round_z
    }
}

struct StopRule {
    tol: f64,
    small_run: usize,
}

impl StopRule {
    fn new(tol: f64) -> Self {
        StopRule { tol, small_run: 0 }
    }

    fn small(&mut self, term: f64, sum: f64, abs_sum: f64) -> bool {
        if term <= self.tol * sum || term <= EPS * abs_sum {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.small_run >= 3
    }
}

/// `g(z) = sum_n a_n z^(n+1)` with the three-term coefficient recurrence,
/// summed term by term: `u_n = a_n z^(n+1)`.
pub(crate) fn sum_g<T: DdScalar>(
    l: T,
    l_c: Complex64,
    eta: f64,
    z: T,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesSum<T>> {
    let zabs = z.magnitude();
    let two_eta_z = z.scale(2.0 * eta);
    let z2 = z * z;
    let two_l1 = l.scale(2.0) + T::from_f64(1.0);
    let num_bound = 2.0 * eta.abs() * zabs + zabs * zabs;
    let n_free = 2.0 * l_c.norm() + 2.0;

    let mut u_prev = z;
    let mut u = z * z * (T::from_f64(eta) / (l + T::from_f64(1.0)));
    let mut sum = u_prev + u;
    let mut dsum = u_prev + u.scale(2.0);
    let mut abs_sum = u_prev.magnitude() + u.magnitude();
    let mut abs_dsum = u_prev.magnitude() + 2.0 * u.magnitude();
    let mut stop = StopRule::new(tol);
    stop.small(u_prev.magnitude(), sum.magnitude(), abs_sum);
    stop.small(u.magnitude(), sum.magnitude(), abs_sum);
    let mut n = 1usize;
    loop {
        let np1 = (n + 1) as f64;
        let rho = num_bound / (np1 * (Complex64::new(np1 + 1.0, 0.0) + 2.0 * l_c).norm());
        if n >= 2 && stop.small_run >= 3 && rho < 0.5 && np1 >= n_free {
            let m = u.magnitude().max(u_prev.magnitude());
            let geo = rho / (1.0 - rho);
            let trunc = m * geo;
            let trunc_z = m * (np1 * geo + rho / ((1.0 - rho) * (1.0 - rho)));
            let k = 2.0 * (n as f64 + 2.0) * EPS;
            return Ok(SeriesSum {
                value: sum,
                zderiv: dsum,
                terms: n + 1,
                trunc,
                trunc_z,
                round: k * abs_sum,
                round_z: k * abs_dsum,
            });
        }
        if n + 1 >= max_terms || !abs_sum.is_finite() {
            return Err(Error::NonConvergence { terms: n + 1 });
        }
        n += 1;
        let nf = n as f64;
        let den = (two_l1 + T::from_f64(nf)).scale(nf);
        let next = (two_eta_z * u - z2 * u_prev) / den;
        u_prev = u;
        u = next;
        sum = sum + u;
        dsum = dsum + u.scale(nf + 1.0);
        let ua = u.magnitude();
        abs_sum += ua;
        abs_dsum += (nf + 1.0) * ua;
        stop.small(ua, sum.magnitude(), abs_sum);
    }
}

/// `S(z) = sum_k (-z^2/4)^k / (k! (nu+1)_k)` and `z S'(z)`, so that
/// `J_nu(z) = (z/2)^nu / Gamma(nu+1) * S(z)`.
pub(crate) fn sum_bessel<T: DdScalar>(nu: f64, z: T, tol: f64, max_terms: usize) -> Result<SeriesSum<T>> {
    let zabs = z.magnitude();
    let q = (z * z).scale(-0.25);
    let q_abs = zabs * zabs / 4.0;
    let mut t = T::from_f64(1.0);
    let mut sum = t;
    let mut dsum = T::zero();
    let mut abs_sum = 1.0;
    let mut abs_dsum = 0.0;
    let mut stop = StopRule::new(tol);
    stop.small(1.0, 1.0, 1.0);
    let mut k = 0usize;
    loop {
        let kp1 = (k + 1) as f64;
        let rho = q_abs / (kp1 * (nu + kp1).abs());
        if k >= 1 && stop.small_run >= 3 && rho < 0.5 && nu + kp1 > 0.0 {
            let m = t.magnitude();
            let geo = rho / (1.0 - rho);
            let trunc_z = m * (2.0 * kp1 * geo + 2.0 * rho / ((1.0 - rho) * (1.0 - rho)));
            let e = 2.0 * (k as f64 + 2.0) * EPS;
            return Ok(SeriesSum {
                value: sum,
                zderiv: dsum,
                terms: k + 1,
                trunc: m * geo,
                trunc_z,
                round: e * abs_sum,
                round_z: e * abs_dsum,
            });
        }
        if k + 1 >= max_terms || !abs_sum.is_finite() {
            return Err(Error::NonConvergence { terms: k + 1 });
        }
        k += 1;
        let kf = k as f64;
        t = q * t / T::from_f64(kf * (nu + kf));
        sum = sum + t;
        dsum = dsum + t.scale(2.0 * kf);
        let ta = t.magnitude();
        abs_sum += ta;
        abs_dsum += 2.0 * kf * ta;
        stop.small(ta, sum.magnitude(), abs_sum);
    }
}
