use super::*;
use crate::exact::ratio;
use alloc::string::ToString;

fn q(n: i64, d: i64) -> BigRational {
    ratio(n, d)
}

#[test]
fn closed_forms_of_z2() {
    assert_eq!(rayleigh_z_exact(&q(1, 1), &q(0, 1), 2).unwrap().get(2), Some(&q(1, 5)));
    assert_eq!(rayleigh_z_exact(&q(1, 2), &q(0, 1), 2).unwrap().get(2), Some(&q(1, 4)));
    assert_eq!(rayleigh_z_exact(&q(2, 1), &q(-1, 1), 2).unwrap().get(2), Some(&q(10, 63)));
}

#[test]
fn z_recurrence_resubstitution() {
    let (l, eta) = (q(7, 3), q(-5, 4));
    let t = rayleigh_z_exact(&l, &eta, 12).unwrap();
    let z = |k: usize| t.get(k).unwrap().clone();
    let l1 = &l + q(1, 1);
    assert_eq!(z(3), q(2, 1) * &eta * z(2) / ((q(2, 1) * &l + q(4, 1)) * &l1));
    for k in 2..12 {
        let mut rhs = q(2, 1) * &eta / &l1 * z(k);
        for j in 1..=k - 2 {
            rhs += z(j + 1) * z(k - j);
        }
        assert_eq!((q(2, 1) * &l + q(k as i64 + 2, 1)) * z(k + 1), rhs);
    }
}

#[test]
fn odd_sums_vanish_without_coulomb_term() {
    let t = rayleigh_z_exact(&q(3, 2), &q(0, 1), 11).unwrap();
    for k in (3..=11).step_by(2) {
        assert_eq!(*t.get(k).unwrap(), q(0, 1));
    }
}

#[test]
fn generating_coefficients_match_closed_forms() {
    for (l, eta) in [(q(2, 1), q(-1, 1)), (q(3, 7), q(-5, 2))] {
        let a = gen_coeffs_a(&l, &eta, 2).unwrap();
        let l1 = &l + q(1, 1);
        let ll = &l * &l1;
        assert_eq!(a[0], q(2, 1) * &eta / &ll);
        assert_eq!(a[1], -q(2, 1) * (&ll + q(2, 1) * &eta * &eta) / (&ll * &ll));
        let want2 = q(2, 1) * &eta * (q(3, 1) * &ll + q(4, 1) * &eta * &eta) / (&ll * &ll * &ll);
        assert_eq!(a[2], want2);
    }
    assert!(gen_coeffs_a(&q(0, 1), &q(-1, 1), 2).is_err());
}

#[test]
fn ztilde_examples() {
    let t = rayleigh_ztilde_exact(&q(1, 2), &q(0, 1), 4).unwrap();
    assert_eq!(t.get(2), Some(&q(7, 12)));
    assert_eq!(t.get(3), Some(&q(0, 1)));
    assert_eq!(t.get(4), Some(&q(3, 32)));
    let t = rayleigh_ztilde_exact(&q(1, 1), &q(0, 1), 2).unwrap();
    assert_eq!(t.get(2), Some(&q(2, 5)));
    // (1 - 2 a1 - p a0 + p^2)/7 at (2, -1), from the closed forms
    let (l, eta) = (q(2, 1), q(-1, 1));
    let a0 = q(2, 1) * &eta / q(6, 1);
    let a1 = -q(2, 1) * (q(6, 1) + q(2, 1)) / q(36, 1);
    let p = q(4, 1) * &eta / q(9, 1);
    let want = (q(1, 1) - &l * a1 - &p * a0 + &p * &p) / q(7, 1);
    assert_eq!(rayleigh_ztilde_exact(&l, &eta, 2).unwrap().get(2), Some(&want));
    assert!(rayleigh_ztilde_exact(&q(0, 1), &eta, 2).is_err());
}

#[test]
fn float_mode_tracks_exact_mode() {
    for &(l, eta) in &[(2.0, -1.0), (0.5, -0.25), (5.0, -2.0), (10.0, -0.5)] {
        let ex = rayleigh_ztilde(&rational_from_f64(l).unwrap(), &rational_from_f64(eta).unwrap(), 12).unwrap();
        let fl = rayleigh_ztilde_f64(&CoulombParams::new(l, eta), 12).unwrap();
        for ((k, e), (_, f)) in ex.iter().zip(fl.iter()) {
            let e = e.to_f64();
            assert!((e - f).abs() <= 1e-13 * e.abs(), "{} {} k={} {} {}", l, eta, k, e, f);
        }
    }
}

#[test]
fn euler_rayleigh_small_order() {
    let b = euler_rayleigh_bounds(&CoulombParams::new(0.5, 0.0), 1).unwrap();
    assert!((b.lower - 12.0 / 7.0).abs() < 1e-15);
    // first zero of r J_1' + J_1 / 2
    let r = 2.165_871_271_488_751_2_f64;
    assert!(b.lower < r * r && r * r < b.upper);
    assert!(matches!(
        euler_rayleigh_bounds(&CoulombParams::new(1.0, 0.5), 1),
        Err(Error::GateViolation(_))
    ));
}

#[test]
fn zeta_base_cases() {
    let z = zeta_coeffs(2, 3);
    assert_eq!(z[0], EtaPolynomial::constant(q(1, 2)));
    assert_eq!(z[1], EtaPolynomial::constant(q(-3, 4)));
    assert_eq!(z[2].to_string(), "9/8 + 1/2*eta^2");
    for c in zeta_coeffs(3, 5) {
        assert_eq!(c.eval(&q(0, 1)), q(0, 1));
    }
}

#[test]
fn zeta_leading_bound() {
    let t = ZetaTable::new(20, 0);
    let mut binom = q(1, 1);
    for k in 1..=10i64 {
        // C(2k, k) built incrementally
        binom = binom * q((2 * k) * (2 * k - 1), k * k);
        let bound = &binom / (q(1i64 << (2 * k), 1) * q(2 * k - 1, 1));
        let z0 = t.get(2 * k as usize, 0).coeff(0);
        assert!(z0 <= bound, "k={} {} > {}", k, z0, bound);
    }
}

#[test]
fn laurent_leading_term_and_closed_form() {
    let v = zeta_laurent_eval(2, &CoulombParams::new(37.0, -0.7), 1).unwrap();
    assert!((v.value - 0.5 / 37.0).abs() < 1e-17);
    let p = CoulombParams::new(100.0, 0.0);
    let three = zeta_laurent_eval(2, &p, 3).unwrap().value;
    let four = zeta_laurent_eval(2, &p, 4).unwrap().value;
    // the first omitted term is p_3 / L^4 = -27/16 * 1e-8
    assert!(((three - 1.0 / 203.0) - 27.0 / 16.0 * 1e-8).abs() < 1e-9);
    assert!((four - 1.0 / 203.0).abs() < 5e-9);
    assert!(zeta_laurent_eval(4, &CoulombParams::new(4.5, 0.0), 2).unwrap().outside_region);
}

fn laurent_error(k: usize, l: f64, eta: f64, n_terms: usize) -> f64 {
    let exact = rayleigh_z_exact(&rational_from_f64(l).unwrap(), &rational_from_f64(eta).unwrap(), k)
        .unwrap()
        .get(k)
        .unwrap()
        .to_f64();
    (zeta_laurent_eval(k, &CoulombParams::new(l, eta), n_terms).unwrap().value - exact).abs()
}

#[test]
fn laurent_error_order_for_fourth_sum() {
    for n_terms in 1..=3 {
        let e50 = laurent_error(4, 50.0, -1.0, n_terms);
        let e100 = laurent_error(4, 100.0, -1.0, n_terms);
        let order = (e50 / e100).log2();
        assert!(order >= n_terms as f64 + 3.0 - 0.3, "n_terms={} order={}", n_terms, order);
    }
}

#[test]
fn scaled_laurent_consistency() {
    for k in [2usize, 4, 6] {
        for n in 1..=3usize {
            let errs: Vec<f64> = [50.0, 100.0, 200.0]
                .iter()
                .map(|&l| laurent_error(k, l, -1.0, n + 1) * libm::pow(l, (k - 1) as f64))
                .collect();
            let slope = (errs[0] / errs[2]).log2() / 2.0;
            assert!(slope >= n as f64 + 0.5, "k={} n={} slope={}", k, n, slope);
        }
    }
}
