use core::fmt::Debug;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A commutative ring with unit. Methods take references so that big
/// integers are never cloned needlessly.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

pub trait Field: Ring {
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn divide(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }
}

/// Conversion to a double, for evaluating exact data at float arguments.
pub trait ToF64 {
    fn to_f64(&self) -> f64;
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl ToF64 for BigRational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for f64 {
    fn inverse(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

impl ToF64 for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for Complex64 {
    fn inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }
}

impl Ring for crate::dd::Dd {
    fn zero() -> Self {
        crate::dd::Dd::ZERO
    }
    fn one() -> Self {
        crate::dd::Dd::ONE
    }
    fn from_i64(n: i64) -> Self {
        // exact for |n| < 2^106
        let hi = n as f64;
        crate::dd::Dd::new(hi).add_f64((n - hi as i64) as f64)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        *self + *other
    }
    fn minus(&self, other: &Self) -> Self {
        *self - *other
    }
    fn times(&self, other: &Self) -> Self {
        *self * *other
    }
    fn negated(&self) -> Self {
        -*self
    }
}

impl Field for crate::dd::Dd {
    fn inverse(&self) -> Option<Self> {
        if self.hi == 0.0 {
            None
        } else {
            Some(crate::dd::Dd::ONE / *self)
        }
    }
}

impl ToF64 for crate::dd::Dd {
    fn to_f64(&self) -> f64 {
        crate::dd::Dd::to_f64(*self)
    }
}
