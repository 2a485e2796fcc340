use super::*;
use crate::exact::ratio;
use crate::params::CoulombParams;
use crate::rayleigh::rayleigh_z_f64;
use alloc::string::ToString;
use alloc::vec;

fn s2(a: (i64, i64), b: (i64, i64)) -> Sqrt2Rational {
    Sqrt2Rational::new(ratio(a.0, a.1), ratio(b.0, b.1))
}

#[test]
fn leading_constant() {
    let t = epsilon_coeffs(1);
    assert_eq!(t.c, Sqrt2Rational::sqrt2());
    assert_eq!(t.len(), 1);
}

#[test]
fn first_coefficient() {
    let e1 = epsilon_coeffs(1).get(1).unwrap().clone();
    let want = Coeff::from_coeffs(vec![s2((-1, 4), (5, 4)), Sqrt2Rational::one()]);
    assert_eq!(e1, want);
    assert_eq!(e1.to_string(), "5*sqrt2/4 - 1/4 + eta");

    // from the u^1 balance: 2 c z0 e1 = c eta - c^2 (z1 - z0) - c^3 z0^(4)
    let zt = ZetaTable::new(4, 1);
    let z = |k, n| lift(zt.get(k, n));
    let c = Coeff::constant(Sqrt2Rational::sqrt2());
    let c2 = c.times(&c);
    let rhs = c
        .times(&Coeff::eta())
        .minus(&c2.times(&z(2, 1).minus(&z(2, 0))))
        .minus(&c2.times(&c).times(&z(4, 0)));
    assert_eq!(c.plus(&c).times(&z(2, 0)).times(&e1), rhs);
}

#[test]
fn displayed_first_coefficient_is_not_reproduced() {
    let shown = Coeff::from_coeffs(vec![s2((-1, 2), (1, 4)), Sqrt2Rational::sqrt2()]);
    assert_ne!(epsilon_coeffs(1).get(1), Some(&shown));
}

#[test]
fn annihilation() {
    for n in 1..=6 {
        let t = epsilon_coeffs(n);
        let r = main_eqn_residual(&t, n as i64 + 1);
        for k in 0..=n as i64 {
            assert!(r.coeff(k).unwrap().is_zero(), "N = {}, u^{}", n, k);
        }
    }
}

#[test]
fn annihilation_detects_a_perturbation() {
    let mut t = epsilon_coeffs(3);
    let bumped = t.eps[1].plus(&Coeff::constant(Sqrt2Rational::rational(ratio(1, 1000))));
    t.eps[1] = bumped;
    let r = main_eqn_residual(&t, 4);
    assert!(r.coeff(0).unwrap().is_zero() && r.coeff(1).unwrap().is_zero());
    assert!(!r.coeff(2).unwrap().is_zero());
}

#[test]
fn printed_recurrence_disagrees() {
    let printed = epsilon_coeffs_as_printed(3);
    let solved = epsilon_coeffs(3);
    assert_eq!(printed.len(), 3);
    assert_ne!(printed.get(1), solved.get(1));
    let r = main_eqn_residual(&printed, 4);
    assert!((0..4).any(|k| !r.coeff(k).unwrap().is_zero()));
}

#[test]
fn eta_degree_bounded_by_index() {
    let t = epsilon_coeffs(10);
    for k in 1..=10 {
        let d = t.get(k).unwrap().degree().unwrap_or(0);
        assert!(d <= k, "eps_{} has degree {}", k, d);
    }
}

#[test]
fn evaluation() {
    let r0 = radius_asymptotic(100.0, -1.0, 0).unwrap();
    assert!((r0 - 100.0 * core::f64::consts::SQRT_2).abs() < 1e-12);
    let r1 = radius_asymptotic(100.0, -1.0, 1).unwrap();
    let s = core::f64::consts::SQRT_2;
    let e1 = -1.0 + 5.0 * s / 4.0 - 0.25;
    assert!((r1 - 100.0 * (s + e1 / 100.0)).abs() < 1e-12);
    assert!(radius_asymptotic(0.0, -1.0, 1).is_err());
    assert!(radius_asymptotic_with(&epsilon_coeffs(1), 10.0, -1.0, 2).is_err());
}

// The defining identity evaluated with floating Rayleigh sums at the
// truncated expansion leaves a residual of order L^-(N+1).
#[test]
fn identity_holds_numerically() {
    let eta = -0.75;
    let t = epsilon_coeffs(3);
    for &(l, tol) in &[(400.0, 4e-9), (1600.0, 2e-11)] {
        let z = rayleigh_z_f64(&CoulombParams::new(l, eta), 41).unwrap();
        let r = radius_asymptotic_with(&t, l, eta, 3).unwrap();
        let mut s = 0.0;
        for m in 1..=20 {
            let zz = z.get(2 * m).unwrap() + z.get(2 * m + 1).unwrap();
            s += libm::pow(r, (m + 1) as f64) * zz;
        }
        let rhs = s / (l + 1.0) - eta * r / ((l + 1.0) * (l + 1.0));
        assert!((rhs - 1.0).abs() < tol, "L = {}: {}", l, rhs - 1.0);
    }
}

#[test]
fn line_fit() {
    let pts: Vec<(f64, f64)> = [10.0, 20.0, 40.0, 80.0].iter().map(|&x| (x, 3.0 * libm::pow(x, -2.5))).collect();
    let (slope, res) = fit_line(&pts);
    assert!((slope + 2.5).abs() < 1e-12);
    assert!(res < 1e-12);
}

#[test]
fn order_gates() {
    assert!(empirical_order(&[10.0, 20.0], -1.0, 1).unwrap_err().is_gate_violation());
    assert!(empirical_order(&[10.0, 30.0, 20.0], -1.0, 1).unwrap_err().is_gate_violation());
}
