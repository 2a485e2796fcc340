use core::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::ring::{Field, Ring, ToF64};

/// An element `a + b*sqrt(2)` of Q(sqrt 2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sqrt2Rational {
    pub a: BigRational,
    pub b: BigRational,
}

impl Sqrt2Rational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Sqrt2Rational { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Sqrt2Rational { a, b: Ring::zero() }
    }

    /// sqrt(2) itself.
    pub fn sqrt2() -> Self {
        Sqrt2Rational { a: Ring::zero(), b: Ring::one() }
    }

    pub fn conjugate(&self) -> Self {
        Sqrt2Rational { a: self.a.clone(), b: -&self.b }
    }

    /// The field norm `a^2 - 2b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }
}

impl Ring for Sqrt2Rational {
    fn zero() -> Self {
        Sqrt2Rational::rational(Ring::zero())
    }
    fn one() -> Self {
        Sqrt2Rational::rational(Ring::one())
    }
    fn from_i64(n: i64) -> Self {
        Sqrt2Rational::rational(Ring::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.a) && Ring::is_zero(&self.b)
    }
    fn plus(&self, o: &Self) -> Self {
        Sqrt2Rational { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn minus(&self, o: &Self) -> Self {
        Sqrt2Rational { a: &self.a - &o.a, b: &self.b - &o.b }
    }
    fn times(&self, o: &Self) -> Self {
        let two = BigRational::from_integer(2.into());
        Sqrt2Rational {
            a: &self.a * &o.a + two * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
    fn negated(&self) -> Self {
        Sqrt2Rational { a: -&self.a, b: -&self.b }
    }
}

impl Field for Sqrt2Rational {
    fn inverse(&self) -> Option<Self> {
        // sqrt 2 is irrational, so the norm vanishes only at zero.
        let n = self.norm().inverse()?;
        Some(Sqrt2Rational { a: &self.a * &n, b: -&self.b * &n })
    }
}

impl ToF64 for Sqrt2Rational {
    fn to_f64(&self) -> f64 {
        let a = self.a.to_f64();
        let b = self.b.to_f64();
        if self.a.is_negative() != self.b.is_negative() && !Ring::is_zero(&self.b) {
            // a + b sqrt2 = norm / (a - b sqrt2) avoids the cancellation
            self.norm().to_f64() / (a - b * core::f64::consts::SQRT_2)
        } else {
            a + b * core::f64::consts::SQRT_2
        }
    }
}

fn write_sqrt2_part(f: &mut fmt::Formatter<'_>, b: &BigRational) -> fmt::Result {
    let num = b.numer();
    let den = b.denom();
    let one: num_bigint::BigInt = 1.into();
    if num.abs() == one {
        if num.is_negative() {
            f.write_str("-")?;
        }
        f.write_str("sqrt2")?;
    } else {
        write!(f, "{}*sqrt2", num)?;
    }
    if *den != one {
        write!(f, "/{}", den)?;
    }
    Ok(())
}

/// Formats as e.g. `sqrt2/4 - 1/2`, irrational part first.
impl fmt::Display for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a_zero = Ring::is_zero(&self.a);
        let b_zero = Ring::is_zero(&self.b);
        if b_zero {
            return write!(f, "{}", self.a);
        }
        write_sqrt2_part(f, &self.b)?;
        if !a_zero {
            if self.a.is_negative() {
                write!(f, " - {}", -&self.a)?;
            } else {
                write!(f, " + {}", self.a)?;
            }
        }
        Ok(())
    }
}
