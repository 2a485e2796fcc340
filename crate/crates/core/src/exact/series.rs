use alloc::vec::Vec;

use super::ring::{Ring, ToF64};

/// `sum_i coeffs[i] * u^(lead + i) + O(u^order)`.
///
/// Nothing at or beyond `order` is ever stored; every operation carries the
/// truncation order explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    lead: i64,
    coeffs: Vec<R>,
    order: i64,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Zeros at either end are dropped, so equal series compare equal.
    pub fn new(mut lead: i64, mut coeffs: Vec<R>, order: i64) -> Self {
        let keep = (order - lead).max(0) as usize;
        coeffs.truncate(keep);
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        let skip = coeffs.iter().take_while(|c| c.is_zero()).count();
        if skip > 0 {
            coeffs.drain(..skip);
            lead += skip as i64;
        }
        if coeffs.is_empty() {
            lead = 0;
        }
        TruncatedSeries { lead, coeffs, order }
    }

    pub fn zero(order: i64) -> Self {
        TruncatedSeries { lead: 0, coeffs: Vec::new(), order }
    }

    pub fn one(order: i64) -> Self {
        Self::new(0, alloc::vec![R::one()], order)
    }

    /// `c * u^k`.
    pub fn monomial(c: R, k: i64, order: i64) -> Self {
        Self::new(k, alloc::vec![c], order)
    }

    /// `1/(1+u) = sum (-1)^n u^n`.
    pub fn inverse_one_plus(order: i64) -> Self {
        let n = order.max(0) as usize;
        let coeffs = (0..n).map(|i| if i % 2 == 0 { R::one() } else { R::one().negated() }).collect();
        Self::new(0, coeffs, order)
    }

    /// Exponent of the first nonzero stored term (0 for the zero series).
    pub fn lead(&self) -> i64 {
        self.lead
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `u^k`; `None` at or beyond the truncation order.
    pub fn coeff(&self, k: i64) -> Option<R> {
        if k >= self.order {
            return None;
        }
        if k < self.lead {
            return Some(R::zero());
        }
        Some(self.coeffs.get((k - self.lead) as usize).cloned().unwrap_or_else(R::zero))
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self::new(self.lead, self.coeffs.clone(), order.min(self.order))
    }

    /// Multiplies by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncatedSeries { lead: self.lead + k, coeffs: self.coeffs.clone(), order: self.order + k }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.lead, self.coeffs.iter().map(|x| x.times(c)).collect(), self.order)
    }

    pub fn negated(&self) -> Self {
        Self::new(self.lead, self.coeffs.iter().map(|x| x.negated()).collect(), self.order)
    }

    fn combine(&self, o: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let lead = self.lead.min(o.lead);
        let order = self.order.min(o.order);
        let coeffs = (lead..order)
            .map(|k| f(&self.coeff(k).unwrap(), &o.coeff(k).unwrap()))
            .collect();
        Self::new(lead, coeffs, order)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a.plus(b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a.minus(b))
    }

    /// Cauchy product.
    pub fn mul(&self, o: &Self) -> Self {
        let lead = self.lead + o.lead;
        let order = (self.order + o.lead).min(o.order + self.lead);
        let n = (order - lead).max(0) as usize;
        let mut v = alloc::vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                v[i + j] = v[i + j].plus(&a.times(b));
            }
        }
        Self::new(lead, v, order)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order - self.lead);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<R: Ring + ToF64> TruncatedSeries<R> {
    /// Sums the stored terms at `u = x`.
    pub fn eval(&self, x: f64) -> f64 {
        let s = self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64());
        s * libm::pow(x, self.lead as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use alloc::vec;
    use num_rational::BigRational;

    #[test]
    fn one_plus_times_one_minus() {
        let a = TruncatedSeries::new(0, vec![ratio(1, 1), ratio(1, 1)], 3);
        let b = TruncatedSeries::new(0, vec![ratio(1, 1), ratio(-1, 1)], 3);
        let p = a.mul(&b);
        assert_eq!(p.coeff(0), Some(ratio(1, 1)));
        assert_eq!(p.coeff(1), Some(ratio(0, 1)));
        assert_eq!(p.coeff(2), Some(ratio(-1, 1)));
        assert_eq!(p.coeff(3), None);
    }

    #[test]
    fn laurent_product_order() {
        // (2/u + 3) * (u/2 + O(u^3))
        let a = TruncatedSeries::new(-1, vec![ratio(2, 1), ratio(3, 1)], 10);
        let b: TruncatedSeries<BigRational> = TruncatedSeries::new(1, vec![ratio(1, 2)], 3);
        let p = a.mul(&b);
        assert_eq!(p.lead(), 0);
        assert_eq!(p.order(), 2);
        assert_eq!(p.coeff(0), Some(ratio(1, 1)));
        assert_eq!(p.coeff(1), Some(ratio(3, 2)));
    }

    #[test]
    fn geometric_inverse() {
        let s: TruncatedSeries<BigRational> = TruncatedSeries::inverse_one_plus(6);
        let one_plus = TruncatedSeries::new(0, vec![ratio(1, 1), ratio(1, 1)], 6);
        assert_eq!(s.mul(&one_plus), TruncatedSeries::one(6));
    }
}
