use alloc::vec::Vec;

use num_rational::BigRational;

use super::ratio;
use super::ring::Ring;
use super::series::TruncatedSeries;

/// `((-1)^n / 2) * ((alpha+1)/2)^n`, the coefficients of
/// `1/(2L+alpha+1) = (1/L) sum_n p_n / L^n`.
pub fn p_coeff(alpha: u32, n: u32) -> BigRational {
    let q = ratio(alpha as i64 + 1, 2);
    let mut v = ratio(1, 2);
    for _ in 0..n {
        v = -(v * &q);
    }
    v
}

/// `1/(2L+alpha+1)` as a series in `u = 1/L`: lead 1, terms `p_0..p_{n_max}`.
pub fn geometric_expansion(alpha: u32, n_max: usize) -> TruncatedSeries<BigRational> {
    let coeffs = (0..=n_max as u32).map(|n| p_coeff(alpha, n)).collect();
    TruncatedSeries::new(1, coeffs, n_max as i64 + 2)
}

/// `A_{alpha,0..=n_max}`, the coefficients of `(1 + sum_k args[k-1] z^k)^alpha`.
/// Missing arguments count as zero.
pub fn potential_polynomials<R: Ring>(alpha: u32, args: &[R], n_max: usize) -> Vec<R> {
    let order = n_max as i64 + 1;
    let mut base = alloc::vec![R::one()];
    base.extend(args.iter().take(n_max).cloned());
    let p = TruncatedSeries::new(0, base, order).pow(alpha);
    (0..=n_max as i64).map(|k| p.coeff(k).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::EtaPolynomial;
    use alloc::vec;

    #[test]
    fn p_values() {
        assert_eq!(p_coeff(2, 0), ratio(1, 2));
        assert_eq!(p_coeff(2, 1), ratio(-3, 4));
        assert_eq!(p_coeff(3, 2), ratio(2, 1));
    }

    #[test]
    fn geometric_times_denominator() {
        let s = geometric_expansion(2, 2);
        assert_eq!(s.coeff(1), Some(ratio(1, 2)));
        assert_eq!(s.coeff(2), Some(ratio(-3, 4)));
        assert_eq!(s.coeff(3), Some(ratio(9, 8)));
        // 2L + 3 = 2/u + 3
        let d = TruncatedSeries::new(-1, vec![ratio(2, 1), ratio(3, 1)], 100);
        let one = s.mul(&d);
        assert_eq!(one.order(), 3);
        assert_eq!(one, TruncatedSeries::one(3));
    }

    #[test]
    fn binomial_row() {
        let a = potential_polynomials(3, &[ratio(1, 1)], 6);
        let want = [1, 3, 3, 1, 0, 0, 0];
        for (x, w) in a.iter().zip(want) {
            assert_eq!(*x, ratio(w, 1));
        }
    }

    #[test]
    fn symbolic_second_coefficient() {
        // args are the polynomials e1 = eta and e2 = 1 + eta^2
        let e1: EtaPolynomial<BigRational> = EtaPolynomial::eta();
        let e2 = EtaPolynomial::from_coeffs(vec![ratio(1, 1), ratio(0, 1), ratio(1, 1)]);
        let a = potential_polynomials(2, &[e1.clone(), e2.clone()], 2);
        assert_eq!(a[0], EtaPolynomial::one());
        assert_eq!(a[1], e1.scale(&ratio(2, 1)));
        assert_eq!(a[2], e2.scale(&ratio(2, 1)).plus(&e1.times(&e1)));
    }
}
