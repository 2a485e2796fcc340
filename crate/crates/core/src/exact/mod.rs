//! Exact coefficient arithmetic: rationals, the field Q(sqrt 2), polynomials
//! in eta, truncated Laurent series and ordinary potential polynomials.

mod poly;
mod potential;
mod ring;
mod series;
mod sqrt2;

pub use num_rational::BigRational;
pub use poly::{CoeffFormat, EtaPolynomial};
pub use potential::{geometric_expansion, p_coeff, potential_polynomials};
pub use ring::{Field, Ring, ToF64};
pub use series::TruncatedSeries;
pub use sqrt2::Sqrt2Rational;

/// `n/d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The exact rational value of a finite double.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}
