use super::*;
use crate::exact::ratio;
use core::f64::consts::FRAC_PI_2;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn exact_coefficients() {
    let a = coulomb_series_coeffs_exact(&ratio(2, 1), &ratio(-1, 1), 4).unwrap();
    assert_eq!(a[0], ratio(1, 1));
    assert_eq!(a[1], ratio(-1, 3));
    for n in 2..=4 {
        let nf = ratio(n as i64, 1);
        let lhs = &nf * (&nf + ratio(5, 1)) * &a[n] - ratio(-2, 1) * &a[n - 1] + &a[n - 2];
        assert_eq!(lhs, ratio(0, 1));
    }
    let sin = coulomb_series_coeffs_exact(&ratio(0, 1), &ratio(0, 1), 2).unwrap();
    assert_eq!(sin[2], ratio(-1, 6));
}

#[test]
fn order_gates() {
    let bad = CoulombParams::new(-1.0, 0.0);
    assert!(matches!(eval_g(&bad, c(1.0, 0.0), 1e-15), Err(Error::GateViolation(_))));
    assert!(coulomb_series_coeffs_exact(&ratio(-3, 2), &ratio(0, 1), 3).is_err());
    assert!(coulomb_series_coeffs(&ratio(-1, 1), &ratio(0, 1), 3).is_err());
}

#[test]
fn sine_case() {
    let p = CoulombParams::new(0.0, 0.0);
    let g = eval_g(&p, c(FRAC_PI_2, 0.0), 1e-15).unwrap();
    assert!((g.value.re - 1.0).abs() < 1e-13);
    assert!(g.derivative.norm() < 1e-13);
    let f = eval_F(&p, c(FRAC_PI_2, 0.0)).unwrap();
    assert!((f.value.re - 1.0).abs() < 1e-13);
}

#[test]
fn against_high_precision_sum() {
    let g = eval_g(&CoulombParams::new(1.0, -1.0), c(1.0, 0.0), 1e-15).unwrap();
    let want = 0.525_263_161_529_983_5;
    assert!((g.value.re - want).abs() < 2e-16);
    assert!((g.derivative.re - 0.098_077_352_179_639_72).abs() < 2e-16);
    assert!((g.value.re - want).abs() <= g.est_error.max(1e-16));
    let f = eval_F(&CoulombParams::new(0.0, -1.0), c(1.0, 0.0)).unwrap();
    assert!((f.value.re - 0.521_314_642_211_715_97).abs() < 1e-14);
}

#[test]
fn continuation_region_on_real_axis() {
    let p = CoulombParams::new(200.0, -1.0);
    for &(x, g, dg) in &[
        (150.0, 4.3710701042300414995e-12, -1.951001483190410757e-12),
        (204.0, 1.0281453890980125389e-26, -9.9474958225735536404e-27),
        (260.0, -2.167944187320027428e-48, -1.4572716528755433775e-48),
    ] {
        let v = eval_g(&p, c(x, 0.0), 1e-15).unwrap();
        assert!(rel(v.value, c(g, 0.0)) < 1e-12, "x={} {:?}", x, v);
        assert!(rel(v.derivative, c(dg, 0.0)) < 1e-12);
    }
    let mut axis = RealAxisG::new(25.0, -1.0).unwrap();
    let (g, dg) = axis.eval(60.0).unwrap();
    assert!((g / 1.1750955146521614083e-12 - 1.0).abs() < 1e-12);
    assert!((dg / -2.3307853563881681736e-12 - 1.0).abs() < 1e-12);
}

#[test]
fn continuation_on_complex_rays() {
    let v = eval_g(&CoulombParams::new(3.0, -1.0), c(60.0, 50.0), 1e-15).unwrap();
    let want = c(-258086654223928252.1, -12119099670423191.947);
    assert!(rel(v.value, want) < 1e-12);
    let v = eval_g(&CoulombParams::new(0.5, -2.0), c(-40.0, 35.0), 1e-15).unwrap();
    let want = c(1431379704149640.4442, 3440209102960003.5854);
    assert!(rel(v.value, want) < 1e-12);
    let dwant = c(3293333026511770.8031, -1445029434099392.2231);
    assert!(rel(v.derivative, dwant) < 1e-12);
}

#[test]
fn bessel_relation_at_two() {
    let f = eval_F(&CoulombParams::new(0.5, 0.0), c(2.0, 0.0)).unwrap();
    let j = eval_bessel_j(1.0, c(2.0, 0.0)).unwrap();
    let want = (PI).sqrt() * j.value.re;
    assert!((f.value.re - want).abs() < 1e-14);
}

#[test]
fn bessel_values() {
    let j = eval_bessel_j(1.0, c(1.0, 0.0)).unwrap();
    assert!((j.value.re - 0.440_050_585_744_933_52).abs() < 1e-16);
    assert!((j.derivative.re - 0.325_147_100_813_033_04).abs() < 1e-16);
    assert_eq!(eval_bessel_j(0.0, c(0.0, 0.0)).unwrap().value.re, 1.0);
    let j = eval_bessel_j(0.5, c(PI, 0.0)).unwrap();
    assert!(j.value.norm() < 1e-13);
    for i in 1..=40 {
        let x = 0.5 * i as f64;
        let j = eval_bessel_j(0.5, c(x, 0.0)).unwrap().value.re;
        let want = (2.0 / (PI * x)).sqrt() * x.sin();
        assert!((j - want).abs() <= 1e-13 * want.abs().max(1e-3), "x={}", x);
    }
}

#[test]
fn dini_zeros_from_figure_captions() {
    assert!(eval_dini(0.0, 0.5, 0.940_770_563_949_737_5).unwrap().abs() < 1e-10);
    assert!(eval_dini(0.5, 0.5, FRAC_PI_2).unwrap().abs() < 1e-12);
    let j = eval_bessel_j(1.0, c(1.0, 0.0)).unwrap();
    assert_eq!(eval_dini(1.0, 0.0, 1.0).unwrap(), j.derivative.re);
}

#[test]
fn normalized_f_is_power_of_g() {
    let p = CoulombParams::new(-0.5, 0.0);
    let r = 0.940_770_563_949_737_5;
    let f = eval_f(&p, c(r, 0.0)).unwrap();
    let j0 = eval_bessel_j(0.0, c(r, 0.0)).unwrap().value.re;
    assert!((f.value.re - r * j0 * j0).abs() < 1e-15);
    // f' vanishes there: z f'/f = 0 is the starlikeness boundary
    assert!(f.derivative.norm() < 1e-10);
}

#[test]
fn ode_residual_with_series_second_derivative() {
    // g'' from the equation must match a centered difference of g'
    let p = CoulombParams::new(1.7, -0.8);
    for &x in &[0.5, 2.0, 4.5] {
        let h = 1e-5;
        let gp = eval_g(&p, c(x + h, 0.0), 1e-15).unwrap().derivative.re;
        let gm = eval_g(&p, c(x - h, 0.0), 1e-15).unwrap().derivative.re;
        let g = eval_g(&p, c(x, 0.0), 1e-15).unwrap();
        let d2 = (gp - gm) / (2.0 * h);
        let l = 1.7;
        let res = d2 + 2.0 * l / x * g.derivative.re + (1.0 - 2.0 * -0.8 / x - 2.0 * l / (x * x)) * g.value.re;
        assert!(res.abs() < 1e-6, "x={} res={}", x, res);
    }
}

#[test]
fn tolerance_gate() {
    let p = CoulombParams::new(0.0, 0.0);
    assert!(eval_g(&p, c(1.0, 0.0), 1e-3).is_err());
}
