//! Derivatives of the one-loop Heisenberg–Euler Lagrangian at a pure
//! magnetic field (G = 0, F = B²/2), in reduced form.
//!
//! Three routes are provided for B²γ_GG: the closed form in ζ′(−1, h),
//! lnΓ and ψ; the Wick-rotated proper-time integral; and an alternative
//! closed form from the literature written with ζ′(0, χ). The closed forms
//! for γ_F and B²γ_FF share the same special functions.
//!
//! For h = 1/(2b) ≥ 1 the printed closed forms lose digits to cancellation
//! between O(h²) terms, so they are evaluated through the asymptotic
//! remainders of lnΓ, ψ and ζ′(−1, ·). The two forms are algebraically
//! identical; [`Vacuum::closed_literal`] exposes the term-by-term version.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::quadrature::{integrate_semi_infinite, QuadratureConfig};
use crate::specfun::{
    bernoulli_unchecked, digamma, digamma_remainder, hurwitz_zeta_deriv_minus1_with, ln_gamma,
    ln_gamma_remainder, zeta_deriv_minus1_remainder, zeta_deriv_zero,
};
use crate::Vacuum;

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Closed forms switch to the remainder formulation at and above this h.
pub(crate) const STABLE_H_MIN: f64 = 1.0;

/// Below this t the proper-time bracket is summed as a Taylor series.
const BRACKET_SERIES_MAX: f64 = 1.0;
const BRACKET_SERIES_TERMS: usize = 34;

/// A pure magnetic field b = B/B_cr together with h = 1/(2b).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPoint {
    b: f64,
    h: f64,
}

impl FieldPoint {
    /// Accepts any finite `b ≥ 0`; `b = 0` gives `h = ∞`.
    pub fn new(b: f64) -> Result<Self> {
        if !(b >= 0.0 && b.is_finite()) {
            return Err(domain("FieldPoint::new", b, "finite b >= 0"));
        }
        let h = if b == 0.0 { f64::INFINITY } else { 0.5 / b };
        Ok(Self { b, h })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn is_zero_field(&self) -> bool {
        self.b == 0.0
    }

    pub(crate) fn require_positive(&self, func: &'static str) -> Result<()> {
        if self.b > 0.0 {
            Ok(())
        } else {
            Err(domain(func, self.b, "b > 0"))
        }
    }
}

/// How a set of Lagrangian weights was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Closed,
    Quadrature,
    Karbstein,
    /// The b = 0 limit, returned without evaluation.
    ZeroField,
}

/// γ_F, B²γ_FF and B²γ_GG, all dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagrangianWeights {
    pub gamma_f: f64,
    pub b2_gamma_ff: f64,
    pub b2_gamma_gg: f64,
    pub route: Route,
}

impl LagrangianWeights {
    pub const ZERO_FIELD: Self = Self {
        gamma_f: -1.0,
        b2_gamma_ff: 0.0,
        b2_gamma_gg: 0.0,
        route: Route::ZeroField,
    };
}

/// Coefficients of the photon dispersion relations.
///
/// `gamma_s = −γ_F`, so it is 1 + O(α) and the κ reduce to the familiar
/// weak-field indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaCoefficients {
    pub kappa_s: f64,
    pub kappa_p: f64,
    pub gamma_s: f64,
}

/// Bracketed O(α) parts of γ_F, B²γ_FF and B²γ_GG before the α/(2π) factor.
#[derive(Debug, Clone, Copy)]
struct Brackets {
    f: f64,
    ff: f64,
    gg: f64,
}

/// g(t) = −3coth t/(2t) + 3/(2sinh²t) + t·coth t, the proper-time weight of
/// B²γ_GG. Non-negative, with g(t) = (7/15)t² + O(t⁴) at the origin.
pub fn proper_time_bracket(t: f64) -> f64 {
    if t < BRACKET_SERIES_MAX {
        // Σ_{n≥2} (c_{n−1} − 3n c_n) t^{2n−2}, c_n = 2^{2n} B_{2n}/(2n)!
        let t2 = t * t;
        let mut scale = 4.0 / 2.0; // 2^{2}/2!
        let mut c_prev = 1.0;
        let mut pow = 1.0;
        let mut sum = 0.0;
        for n in 1..=BRACKET_SERIES_TERMS {
            let c = bernoulli_unchecked(2 * n) * scale;
            sum += (c_prev - 3.0 * n as f64 * c) * pow;
            c_prev = c;
            pow *= t2;
            let m = (2 * n) as f64;
            scale *= 4.0 / ((m + 1.0) * (m + 2.0));
        }
        sum
    } else {
        let coth = 1.0 / t.tanh();
        let sinh = t.sinh();
        -1.5 * coth / t + 1.5 / (sinh * sinh) + t * coth
    }
}

impl Vacuum {
    fn alpha_over_2pi(&self) -> f64 {
        self.constants.alpha / (2.0 * PI)
    }

    fn brackets_literal(&self, h: f64) -> Result<Brackets> {
        let zd = hurwitz_zeta_deriv_minus1_with(h, &self.precision)?;
        let lg = ln_gamma(h)?;
        let psi1 = digamma(h)? + 1.0 / h;
        let ln_h = h.ln();
        let h2 = h * h;
        Ok(Brackets {
            f: 1.0 / 3.0 + 2.0 * h2 - 8.0 * zd + 4.0 * h * lg - 2.0 * h * ln_h + (2.0 / 3.0) * ln_h
                - 2.0 * h * LN_2PI,
            ff: 2.0 / 3.0 + 4.0 * h2 * psi1 - 2.0 * h - 4.0 * h2 - 4.0 * h * lg + 2.0 * h * LN_2PI
                - 2.0 * h * ln_h,
            gg: -1.0 / 3.0 - (2.0 / 3.0) * psi1 - 2.0 * h2 + 1.0 / (3.0 * h) + 8.0 * zd
                - 4.0 * h * lg
                + 2.0 * h * LN_2PI
                + 2.0 * h * ln_h,
        })
    }

    fn brackets_stable(&self, h: f64) -> Result<Brackets> {
        let s2 = ln_gamma_remainder(h, 1)?;
        let p2 = digamma_remainder(h, 1)?;
        let r = zeta_deriv_minus1_remainder(h, 0, &self.precision)?;
        Ok(Brackets {
            f: 4.0 * h * s2 - 8.0 * r,
            ff: -4.0 * h * h * p2 - 4.0 * h * s2,
            gg: 1.0 / (18.0 * h * h) + (2.0 / 3.0) * p2 + 8.0 * r - 4.0 * h * s2,
        })
    }

    fn brackets(&self, fp: FieldPoint, func: &'static str) -> Result<Brackets> {
        fp.require_positive(func)?;
        if fp.h >= STABLE_H_MIN {
            self.brackets_stable(fp.h)
        } else {
            self.brackets_literal(fp.h)
        }
    }

    fn weights_from(&self, br: Brackets) -> LagrangianWeights {
        let a = self.alpha_over_2pi();
        LagrangianWeights {
            gamma_f: -1.0 - a * br.f,
            b2_gamma_ff: a * br.ff,
            b2_gamma_gg: a * br.gg,
            route: Route::Closed,
        }
    }

    /// γ_F = ∂L/∂F, equal to −1 at zero field.
    pub fn gamma_f(&self, fp: FieldPoint) -> Result<f64> {
        Ok(-1.0 - self.alpha_over_2pi() * self.brackets(fp, "gamma_f")?.f)
    }

    /// B²·∂²L/∂F².
    pub fn b2_gamma_ff(&self, fp: FieldPoint) -> Result<f64> {
        Ok(self.alpha_over_2pi() * self.brackets(fp, "b2_gamma_ff")?.ff)
    }

    /// B²·∂²L/∂G² from the closed form.
    pub fn b2_gamma_gg_closed(&self, fp: FieldPoint) -> Result<f64> {
        Ok(self.alpha_over_2pi() * self.brackets(fp, "b2_gamma_gg_closed")?.gg)
    }

    /// All three closed-form weights. `b = 0` returns the exact zero-field
    /// limit.
    pub fn weights(&self, fp: FieldPoint) -> Result<LagrangianWeights> {
        if fp.is_zero_field() {
            return Ok(LagrangianWeights::ZERO_FIELD);
        }
        Ok(self.weights_from(self.brackets(fp, "weights")?))
    }

    /// The closed forms evaluated term by term as printed, without the
    /// large-h rearrangement. Loses accuracy as b → 0.
    pub fn closed_literal(&self, fp: FieldPoint) -> Result<LagrangianWeights> {
        fp.require_positive("closed_literal")?;
        Ok(self.weights_from(self.brackets_literal(fp.h)?))
    }

    /// B²γ_GG = (α/3π) ∫₀^∞ (dt/t) e^{−t/b} g(t), see [`proper_time_bracket`].
    pub fn b2_gamma_gg_quadrature(&self, fp: FieldPoint, config: &QuadratureConfig) -> Result<f64> {
        fp.require_positive("b2_gamma_gg_quadrature")?;
        let b = fp.b;
        let integrand = |t: f64| {
            if t == 0.0 {
                0.0
            } else {
                (-t / b).exp() * proper_time_bracket(t) / t
            }
        };
        let integral = integrate_semi_infinite(integrand, b, config)?;
        Ok(self.constants.alpha / (3.0 * PI) * integral.value)
    }

    /// B²γ_GG from the alternative ζ′(0, χ) representation, χ = h, taken
    /// verbatim. Kept as an informational cross-check only.
    pub fn b2_gamma_gg_karbstein(&self, fp: FieldPoint) -> Result<f64> {
        fp.require_positive("b2_gamma_gg_karbstein")?;
        let chi = fp.h;
        let zd1 = hurwitz_zeta_deriv_minus1_with(chi, &self.precision)?;
        let zd0 = zeta_deriv_zero(chi)?;
        let brace = 4.0 * zd1 - chi * (2.0 * zd0 - chi.ln() + chi) - (2.0 * digamma(chi)?) / 6.0
            + 1.0 / chi
            + 1.0;
        Ok(self.constants.alpha / PI * brace)
    }

    /// κ_s, κ_p and γ_s. Zero-field limit at b = 0.
    pub fn kappas(&self, fp: FieldPoint) -> Result<KappaCoefficients> {
        let w = self.weights(fp)?;
        let gamma_s = -w.gamma_f;
        Ok(KappaCoefficients {
            kappa_s: w.b2_gamma_ff / gamma_s,
            kappa_p: w.b2_gamma_gg / gamma_s,
            gamma_s,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn fp(b: f64) -> FieldPoint {
        FieldPoint::new(b).unwrap()
    }

    #[test]
    fn field_point_invariants() {
        let p = fp(0.25);
        assert_eq!(p.h() * 2.0 * p.b(), 1.0);
        assert!(FieldPoint::new(-1.0).is_err());
        assert!(FieldPoint::new(f64::NAN).is_err());
        assert!(fp(0.0).h().is_infinite());
    }

    #[test]
    fn zero_field() {
        let vac = Vacuum::default();
        assert_eq!(vac.weights(fp(0.0)).unwrap(), LagrangianWeights::ZERO_FIELD);
        let k = vac.kappas(fp(0.0)).unwrap();
        assert_eq!((k.kappa_s, k.kappa_p, k.gamma_s), (0.0, 0.0, 1.0));
        assert!(vac.gamma_f(fp(0.0)).is_err());
        assert!(vac.b2_gamma_gg_closed(fp(0.0)).is_err());
    }

    #[test]
    fn reference_values() {
        // High-precision values of the brackets at b = 1/6 (h = 3).
        let vac = Vacuum::default();
        let a = vac.alpha_over_2pi();
        let w = vac.weights(fp(1.0 / 6.0)).unwrap();
        assert!(rel(w.b2_gamma_gg, a * 0.008_521_701_924_148_983) < 1e-11);
        assert!(rel(w.gamma_f + 1.0, a * 0.002_414_177_322_165_059_4) < 1e-10);
        assert!(rel(w.b2_gamma_ff, a * 0.004_725_229_939_554_725) < 1e-11);
    }

    #[test]
    fn stable_and_literal_forms_agree_where_both_are_accurate() {
        let vac = Vacuum::default();
        for h in [1.0, 1.5, 2.0, 3.0] {
            let s = vac.brackets_stable(h).unwrap();
            let l = vac.brackets_literal(h).unwrap();
            assert!(rel(s.gg, l.gg) < 1e-10, "gg h={h}");
            assert!(rel(s.ff, l.ff) < 1e-10, "ff h={h}");
            assert!(rel(s.f, l.f) < 1e-10, "f h={h}");
        }
    }

    #[test]
    fn weak_field_coefficients() {
        let vac = Vacuum::default();
        let a = vac.alpha_over_2pi();
        let b = 1e-3;
        let w = vac.weights(fp(b)).unwrap();
        assert!(rel(w.b2_gamma_gg / (b * b), a * 14.0 / 45.0) < 1e-4);
        assert!(rel(w.b2_gamma_ff / (b * b), a * 8.0 / 45.0) < 1e-4);
        let b = 0.05;
        let gg = vac.b2_gamma_gg_closed(fp(b)).unwrap();
        assert!(rel(gg / (b * b), 7.0 * vac.constants.alpha / (45.0 * PI)) < 0.01);
        let k = vac.kappas(fp(b)).unwrap();
        assert!((k.kappa_p / k.kappa_s - 7.0 / 4.0).abs() < 0.01);
    }

    #[test]
    fn gamma_f_limits() {
        let vac = Vacuum::default();
        assert!((vac.gamma_f(fp(1e-4)).unwrap() + 1.0).abs() < 1e-10);
        let mut b = 1e-3;
        while b <= 1.0 {
            let d = vac.gamma_f(fp(b)).unwrap() + 1.0;
            assert!(d > 0.0 && d <= vac.constants.alpha, "b={b}");
            b *= 1.3;
        }
    }

    #[test]
    fn ff_is_logarithmic_derivative_of_gamma_f() {
        // B²γ_FF = b·dγ_F/db
        let vac = Vacuum::default();
        for b in [0.05, 0.3, 1.0, 4.0, 20.0] {
            let d = 1e-5 * b;
            // γ_F + 1 directly, so the difference does not lose digits to −1.
            let g = |x: f64| -vac.alpha_over_2pi() * vac.brackets(fp(x), "test").unwrap().f;
            let fd = b * (g(b + d) - g(b - d)) / (2.0 * d);
            assert!(rel(fd, vac.b2_gamma_ff(fp(b)).unwrap()) < 1e-6, "b={b}");
        }
    }

    #[test]
    fn quadrature_matches_closed() {
        let vac = Vacuum::default();
        let cfg = QuadratureConfig::default();
        for b in [0.01, 0.5, 1.0, 5.0, 30.0] {
            let c = vac.b2_gamma_gg_closed(fp(b)).unwrap();
            let q = vac.b2_gamma_gg_quadrature(fp(b), &cfg).unwrap();
            assert!(rel(q, c) < 1e-9, "b={b}: {q} vs {c}");
        }
    }

    #[test]
    fn bracket_series_and_closed_form_meet() {
        let t = BRACKET_SERIES_MAX;
        let coth = 1.0 / t.tanh();
        let direct = -1.5 * coth / t + 1.5 / t.sinh().powi(2) + t * coth;
        assert!(rel(proper_time_bracket(t - 1e-15), direct) < 1e-13);
        let t = 1e-3;
        assert!(rel(proper_time_bracket(t) / t, 7.0 / 15.0 * t) < 1e-5);
        assert_eq!(proper_time_bracket(0.0), 0.0);
    }

    #[test]
    fn karbstein_route_is_finite() {
        let vac = Vacuum::default();
        for b in [0.1, 1.0, 10.0] {
            assert!(vac.b2_gamma_gg_karbstein(fp(b)).unwrap().is_finite());
        }
    }
}
