use coulomb_core::rayleigh::{rayleigh_z_f64, zeta_laurent_eval};
use coulomb_core::specfun::{eval_F, eval_bessel_j};
use coulomb_core::verify::{starlike_scan, zero_sum_oracle, Normalized, ZerosOf};
use coulomb_core::CoulombParams;
use num_complex::Complex64;

#[test]
fn coulomb_at_zero_charge_is_a_bessel_function() {
    for &l in &[0.0, 1.0, 3.7] {
        for &(re, im) in &[(0.3, 0.0), (2.5, 1.0), (-4.0, 3.0), (6.0, -5.5), (0.1, 9.0)] {
            let z = Complex64::new(re, im);
            let f = eval_F(&CoulombParams::new(l - 0.5, 0.0), z).unwrap().value;
            let j = eval_bessel_j(l, z).unwrap().value;
            let want = (z * core::f64::consts::FRAC_PI_2).sqrt() * j;
            assert!((f - want).norm() / (1.0 + f.norm()) < 1e-12, "l = {}, z = {}", l, z);
        }
    }
}

// recurrence, direct summation and the large-L expansion agree
#[test]
fn rayleigh_oracle_triangle() {
    let p = CoulombParams::new(40.0, -1.0);
    let rec = *rayleigh_z_f64(&p, 2).unwrap().get(2).unwrap();
    let direct = zero_sum_oracle(&p, ZerosOf::F, 2, 300, true).unwrap();
    let laurent = zeta_laurent_eval(2, &p, 6).unwrap();
    assert!(!laurent.outside_region);
    assert!((rec - direct).abs() < 1e-6, "{} vs {}", rec, direct);
    assert!((rec - laurent.value).abs() < 1e-9, "{} vs {}", rec, laurent.value);
}

#[test]
fn computed_radii_are_bracketed_by_scans() {
    let cases = [
        Normalized::F(CoulombParams::new(1.0, -0.5)),
        Normalized::F(CoulombParams::new(-0.3, -1.0)),
        Normalized::G(CoulombParams::new(2.0, -1.0)),
        Normalized::G(CoulombParams::new(0.5, 0.0)),
        Normalized::Phi { nu: 2.0, alpha: -1.0 },
    ];
    for h in &cases {
        let r = h.radius().unwrap();
        assert!(starlike_scan(h, 0.99 * r, 1024).unwrap().min_real_part > 0.0, "{:?}", h);
        assert!(starlike_scan(h, 1.01 * r, 1024).unwrap().min_real_part < 0.0, "{:?}", h);
    }
}
