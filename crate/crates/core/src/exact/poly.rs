use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_rational::BigRational;

use super::ring::{Ring, ToF64};
use super::sqrt2::Sqrt2Rational;

/// A polynomial in the symbol `eta`. `coeffs[k]` multiplies `eta^k`;
/// trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaPolynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> EtaPolynomial<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        EtaPolynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    /// `c * eta^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = alloc::vec![R::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn eta() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    pub fn eval(&self, eta: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.times(eta).plus(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> EtaPolynomial<S> {
        EtaPolynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring + ToF64> EtaPolynomial<R> {
    pub fn eval_f64(&self, eta: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * eta + c.to_f64())
    }
}

impl<R: Ring> Ring for EtaPolynomial<R> {
    fn zero() -> Self {
        EtaPolynomial { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(R::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k).plus(&o.coeff(k))).collect())
    }
    fn minus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k).minus(&o.coeff(k))).collect())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = alloc::vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].plus(&a.times(b));
            }
        }
        Self::from_coeffs(v)
    }
    fn negated(&self) -> Self {
        EtaPolynomial { coeffs: self.coeffs.iter().map(|c| c.negated()).collect() }
    }
}

/// How a coefficient prints inside a polynomial.
pub trait CoeffFormat: Ring + fmt::Display {
    /// A sum of several parts, which needs parentheses before `*eta`.
    fn is_compound(&self) -> bool {
        false
    }
}

impl CoeffFormat for BigRational {}

impl CoeffFormat for Sqrt2Rational {
    fn is_compound(&self) -> bool {
        !self.a.is_zero() && !self.b.is_zero()
    }
}

/// Ascending powers, e.g. `9/8 + 1/2*eta^2`.
impl<R: CoeffFormat> fmt::Display for EtaPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = String::new();
            if k == 0 {
                write!(term, "{}", c)?;
            } else {
                let var = if k == 1 { String::from("eta") } else { alloc::format!("eta^{}", k) };
                if *c == R::one() {
                    term = var;
                } else if *c == R::one().negated() {
                    write!(term, "-{}", var)?;
                } else if c.is_compound() {
                    write!(term, "({})*{}", c, var)?;
                } else {
                    write!(term, "{}*{}", c, var)?;
                }
            }
            if first {
                f.write_str(&term)?;
                first = false;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", term)?;
            }
        }
        Ok(())
    }
}
