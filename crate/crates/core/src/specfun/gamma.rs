use core::f64::consts::PI;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

// B_{2k} / (2k (2k-1))
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// log Gamma(z) for complex z off the nonpositive integers. The imaginary
/// part is correct modulo 2*pi, which is all that `exp` needs.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let s = (z * PI).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 15.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        corr += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + corr - shift
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_values() {
        for &(x, want) in &[(1.0, 0.0), (0.5, 0.5723649429247001), (10.0, 12.801827480081469), (-0.5, 1.2655121234846454)] {
            let v = ln_gamma(Complex64::new(x, 0.0));
            assert!((v.re - want).abs() < 1e-14, "{} {}", x, v);
        }
    }

    #[test]
    fn modulus_on_imaginary_line() {
        // |Gamma(1 + i y)|^2 = pi y / sinh(pi y)
        let y = 1.3_f64;
        let v = ln_gamma(Complex64::new(1.0, y));
        let want = 0.5 * (PI * y / (PI * y).sinh()).ln();
        assert!((v.re - want).abs() < 1e-14);
    }

    #[test]
    fn recurrence_in_complex_plane() {
        let z = Complex64::new(0.2, 0.1);
        let lhs = ln_gamma(z + 1.0) - ln_gamma(z);
        let d = (lhs - z.ln()).exp();
        assert!((d - 1.0).norm() < 1e-14);
    }
}
