//! Double-double arithmetic (about 32 significant digits), real and complex.
//!
//! Products use Dekker splitting so nothing here depends on a hardware FMA.

use core::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Unit roundoff of the double-double format.
pub const EPS: f64 = 4.93e-32;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let c = 134_217_729.0 * a;
    let hi = c - (c - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub const fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    pub fn add_f64(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };

    pub fn new(re: Dd, im: Dd) -> Self {
        DdComplex { re, im }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(self) -> Self {
        DdComplex { re: self.re, im: -self.im }
    }
}

impl From<Complex64> for DdComplex {
    fn from(z: Complex64) -> Self {
        DdComplex { re: Dd::new(z.re), im: Dd::new(z.im) }
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn add(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re + b.re, im: self.im + b.im }
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn sub(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Neg for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn neg(self) -> DdComplex {
        DdComplex { re: -self.re, im: -self.im }
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn mul(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

impl Div for DdComplex {
    type Output = DdComplex;
    fn div(self, b: DdComplex) -> DdComplex {
        let den = b.re * b.re + b.im * b.im;
        let num = self * b.conj();
        DdComplex { re: num.re / den, im: num.im / den }
    }
}

/// The operations the series and Taylor kernels need, so that the real axis
/// can run on the cheaper real type.
pub trait DdScalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn from_f64(x: f64) -> Self;
    fn scale(self, k: f64) -> Self;
    /// Magnitude, to double precision.
    fn magnitude(self) -> f64;
    fn to_c64(self) -> Complex64;
}

impl DdScalar for Dd {
    fn zero() -> Self {
        Dd::ZERO
    }
    fn from_f64(x: f64) -> Self {
        Dd::new(x)
    }
    #[inline]
    fn scale(self, k: f64) -> Self {
        self.mul_f64(k)
    }
    #[inline]
    fn magnitude(self) -> f64 {
        libm::fabs(self.to_f64())
    }
    fn to_c64(self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl DdScalar for DdComplex {
    fn zero() -> Self {
        DdComplex::ZERO
    }
    fn from_f64(x: f64) -> Self {
        DdComplex { re: Dd::new(x), im: Dd::ZERO }
    }
    #[inline]
    fn scale(self, k: f64) -> Self {
        DdComplex { re: self.re.mul_f64(k), im: self.im.mul_f64(k) }
    }
    #[inline]
    fn magnitude(self) -> f64 {
        libm::hypot(self.re.to_f64(), self.im.to_f64())
    }
    fn to_c64(self) -> Complex64 {
        DdComplex::to_c64(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_third_round_trips() {
        let third = Dd::ONE / Dd::new(3.0);
        let back = third * Dd::new(3.0) - Dd::ONE;
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn cancellation_keeps_low_word() {
        let a = Dd::new(1.0).add_f64(1e-20);
        let d = a - Dd::ONE;
        assert!((d.to_f64() - 1e-20).abs() < 1e-35);
    }

    #[test]
    fn complex_division_inverts_multiplication() {
        let a = DdComplex::from(Complex64::new(0.3, -1.7));
        let b = DdComplex::from(Complex64::new(2.5, 0.25));
        let q = (a * b) / b - a;
        assert!(q.magnitude() < 1e-30);
    }
}
