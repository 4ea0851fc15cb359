use std::f64::consts::{E, LN_2, PI};

use proptest::prelude::*;
use qedvac::specfun::{
    bernoulli_exact, bernoulli_number, bernoulli_poly2, digamma, hurwitz_zeta,
    hurwitz_zeta_deriv_minus1, lambert_w, ln_gamma, polygamma, riemann_zeta, zeta_deriv_zero,
    Constants, HALF_LN_2PI,
};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #[test]
    fn ln_gamma_recurrence(x in 1e-3f64..100.0) {
        let lhs = ln_gamma(x + 1.0).unwrap() - ln_gamma(x).unwrap();
        prop_assert!(close(lhs, x.ln(), 1e-11), "x={x}: {lhs} vs {}", x.ln());
    }

    #[test]
    fn digamma_recurrence(x in 1e-3f64..100.0) {
        let lhs = digamma(x + 1.0).unwrap();
        let rhs = digamma(x).unwrap() + 1.0 / x;
        prop_assert!(close(lhs, rhs, 1e-11));
    }

    #[test]
    fn trigamma_is_hurwitz_zeta_two(x in 1e-3f64..100.0) {
        let a = polygamma(1, x).unwrap();
        let b = hurwitz_zeta(2.0, x).unwrap();
        prop_assert!(((a - b) / b).abs() < 1e-12, "x={x}: {a} vs {b}");
    }

    #[test]
    fn hurwitz_shift(s in 1.1f64..12.0, h in 0.01f64..50.0) {
        let lhs = hurwitz_zeta(s, h).unwrap() - hurwitz_zeta(s, h + 1.0).unwrap();
        let rhs = h.powf(-s);
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-10);
    }

    #[test]
    fn zeta_prime_recurrence(h in 0.01f64..50.0) {
        let lhs = hurwitz_zeta_deriv_minus1(h + 1.0).unwrap() - hurwitz_zeta_deriv_minus1(h).unwrap();
        prop_assert!(close(lhs, h * h.ln(), 1e-10), "h={h}");
    }

    #[test]
    fn lambert_principal_residual(z in -1.0f64 / E..1e6) {
        let w = lambert_w(0, z).unwrap();
        prop_assert!(w >= -1.0);
        prop_assert!((w * w.exp() - z).abs() <= 1e-13 * z.abs().max(1.0));
    }

    #[test]
    fn lambert_lower_residual(z in -1.0f64 / E..-1e-300) {
        let w = lambert_w(-1, z).unwrap();
        prop_assert!(w <= -1.0);
        prop_assert!((w * w.exp() - z).abs() <= 1e-13);
    }
}

#[test]
fn gamma_family_known_values() {
    assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
    assert!((ln_gamma(0.5).unwrap() - 0.5 * PI.ln()).abs() < 1e-15);
    assert!((ln_gamma(0.5).unwrap() - 0.572_364_942_9).abs() < 1e-10);
    let g = Constants::default().euler_gamma;
    assert!((digamma(1.0).unwrap() + g).abs() < 1e-15);
    assert!((digamma(0.5).unwrap() + g + 2.0 * LN_2).abs() < 1e-14);
    assert!((polygamma(1, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
    assert!((polygamma(2, 1.0).unwrap() + 2.0 * riemann_zeta(3).unwrap()).abs() < 1e-13);
    assert!((polygamma(2, 1.0).unwrap() + 2.404).abs() < 1e-3);
    for x in [0.0, -1.0] {
        assert!(ln_gamma(x).is_err());
        assert!(digamma(x).is_err());
        assert!(polygamma(1, x).is_err());
    }
    assert!(polygamma(3, 1.0).is_err());
}

#[test]
fn ln_gamma_accuracy_over_wide_range() {
    // Values from an independent high-precision evaluation.
    let cases = [
        (1e-6, 13.815_509_980_749_432),
        (0.1, 2.252_712_651_734_206),
        (7.5, 7.534_364_236_758_733),
        (12.25, 18.115_669_505_710_893),
        (1e6, 12_815_504.569_147_61),
    ];
    for (x, v) in cases {
        let got = ln_gamma(x).unwrap();
        assert!(((got - v) / v).abs() < 1e-13, "x={x}: {got} vs {v}");
    }
}

#[test]
fn riemann_zeta_values() {
    assert!((riemann_zeta(2).unwrap() - PI * PI / 6.0).abs() < 1e-15);
    assert!((riemann_zeta(3).unwrap() - 1.202).abs() < 1e-3);
    assert!((riemann_zeta(4).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
    assert!(riemann_zeta(1).is_err());
    assert!((hurwitz_zeta(5.0, 1.0).unwrap() - riemann_zeta(5).unwrap()).abs() < 1e-14);
}

#[test]
fn zeta_prime_and_lerch() {
    let a = Constants::default().glaisher_a;
    assert!((hurwitz_zeta_deriv_minus1(1.0).unwrap() - (1.0 / 12.0 - a.ln())).abs() < 1e-13);
    assert!((hurwitz_zeta_deriv_minus1(1.0).unwrap() + 0.165_421_143_7).abs() < 1e-10);
    assert!((zeta_deriv_zero(1.0).unwrap() + HALF_LN_2PI).abs() < 1e-15);
    assert!((zeta_deriv_zero(0.5).unwrap() + 0.5 * LN_2).abs() < 1e-15);
    assert!(zeta_deriv_zero(0.0).is_err());
}

#[test]
fn bernoulli_values() {
    assert_eq!(bernoulli_number(2).unwrap(), 1.0 / 6.0);
    assert_eq!(bernoulli_number(4).unwrap(), -1.0 / 30.0);
    assert_eq!(bernoulli_exact(12).unwrap().to_string(), "-691/2730");
    assert!(bernoulli_number(3).is_err());
    assert_eq!(bernoulli_poly2(0.0), 1.0 / 6.0);
    assert!((bernoulli_poly2(0.5) + 1.0 / 12.0).abs() < 1e-16);
}

#[test]
fn lambert_fixed_points() {
    assert_eq!(lambert_w(0, 0.0).unwrap(), 0.0);
    assert!((lambert_w(0, E).unwrap() - 1.0).abs() < 1e-15);
    assert_eq!(lambert_w(0, -1.0 / E).unwrap(), -1.0);
    assert_eq!(lambert_w(-1, -1.0 / E).unwrap(), -1.0);
    assert!(lambert_w(0, -0.4).is_err());
    assert!(lambert_w(-1, 0.1).is_err());
}

#[test]
fn second_polygamma_inequality() {
    let mut h = 0.1;
    while h <= 50.0 {
        let lhs = polygamma(2, 1.0 + h).unwrap();
        let rhs = -1.0 / h.powi(2) + 1.0 / h.powi(3) - 0.5 / h.powi(4) + 1.0 / (6.0 * h.powi(6));
        assert!(lhs <= rhs, "h={h}: {lhs} > {rhs}");
        h *= 1.05;
    }
}

#[test]
fn constants_invariants() {
    let c = Constants::default();
    assert!(c.validate().is_ok());
    assert!((c.euler_gamma - 0.577).abs() < 5e-4);
    assert!((c.glaisher_a - 1.282_427_12).abs() < 1e-8);
    let bad = Constants { alpha: 0.02, ..c };
    assert!(bad.validate().is_err());
}
