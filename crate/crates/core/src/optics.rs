//! Refractive indices of the two photon polarization modes, their
//! difference, Faraday rotation and the perpendicular-mode group velocity.
//!
//! The exact routes follow from the Lagrangian weights:
//! n_⊥ = 1 + ½B²γ_GG·sin²θ and n_∥ = 1 + ½B²γ_FF·sin²θ. Weak- and
//! strong-field series for n_⊥ and the κ-based dispersion relations are
//! provided for cross-checks.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, Error, Result};
use crate::lagrangian::FieldPoint;
use crate::specfun::{bernoulli_unchecked, riemann_zeta};
use crate::Vacuum;

/// Upper end of the weak-field series window, in units of B_cr.
pub const WEAK_SERIES_MAX_B: f64 = 0.44;
/// The strong-field series is used above this field.
pub const STRONG_SERIES_MIN_B: f64 = 0.5;
/// Below this field the high-field velocity estimate is flagged.
pub const HU_MIN_B: f64 = 10.0;

/// Photon momentum, propagation angle and path length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonKinematics {
    /// |k|/m.
    pub k_over_m: f64,
    /// Angle between B and k, in radians.
    pub theta: f64,
    /// Path length in units of 1/m.
    pub path_length: f64,
}

impl Default for PhotonKinematics {
    fn default() -> Self {
        Self {
            k_over_m: 0.1,
            theta: FRAC_PI_2,
            path_length: 1.0,
        }
    }
}

impl PhotonKinematics {
    pub fn new(k_over_m: f64, theta: f64, path_length: f64) -> Result<Self> {
        let kin = Self {
            k_over_m,
            theta,
            path_length,
        };
        kin.validate()?;
        Ok(kin)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.k_over_m >= 0.0 && self.k_over_m.is_finite()) {
            return Err(domain("PhotonKinematics", self.k_over_m, "finite k/m >= 0"));
        }
        if !(0.0..=PI).contains(&self.theta) {
            return Err(domain("PhotonKinematics", self.theta, "theta in [0, pi]"));
        }
        if !(self.path_length >= 0.0 && self.path_length.is_finite()) {
            return Err(domain(
                "PhotonKinematics",
                self.path_length,
                "finite path length >= 0",
            ));
        }
        Ok(())
    }

    /// The low-frequency treatment assumes |k| ≪ m.
    pub fn is_low_frequency(&self) -> bool {
        self.k_over_m < 1.0
    }

    pub fn sin2(&self) -> f64 {
        if self.theta == FRAC_PI_2 {
            1.0
        } else {
            self.theta.sin().powi(2)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Parallel,
    Perpendicular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RefractionMethod {
    Exact,
    WeakSeries,
    StrongSeries,
    Kappa,
}

/// A refractive index with its provenance.
///
/// `alternate` carries a second evaluation of the same quantity where one
/// is natural: the binomial form for the κ route of n_∥, and √(1+κ_p) for
/// the exact n_⊥.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefractionResult {
    pub mode: Mode,
    pub n: f64,
    pub method: RefractionMethod,
    pub in_validity_domain: bool,
    pub alternate: Option<f64>,
}

/// Index difference from the exact routes, with the printed Δn series
/// evaluated alongside when it converges (h < 2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaN {
    pub value: f64,
    pub series: Option<f64>,
}

impl DeltaN {
    pub fn series_deviation(&self) -> Option<f64> {
        self.series.map(|s| s - self.value)
    }
}

/// The large-field estimate of v_⊥² together with its applicability flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighFieldVelocity {
    pub v_perp_sq: f64,
    pub applicable: bool,
}

/// Σ_{j=1}^{J} w_j ξ^{2j}, the weak-field n_⊥ bracket, truncated before
/// the first term that grows.
fn weak_bracket(xi: f64, order: usize) -> f64 {
    let x2 = xi * xi;
    let mut pow = x2;
    let mut sum = 0.0;
    let mut last = f64::INFINITY;
    for j in 1..=order {
        let jf = j as f64;
        let w = -(1.0 / 3.0)
            * 4f64.powi(j as i32)
            * (6.0 * bernoulli_unchecked(2 * j + 2)
                - (2.0 * jf + 1.0) * bernoulli_unchecked(2 * j))
            / (jf * (2.0 * jf + 1.0));
        let term = w * pow;
        if term.abs() > last {
            break;
        }
        sum += term;
        last = term.abs();
        pow *= x2;
    }
    sum
}

/// The strong-field n_⊥ bracket through ξ^{−J}.
fn strong_bracket(vac: &Vacuum, xi: f64, order: usize) -> Result<f64> {
    let c = &vac.constants;
    let zeta3 = riemann_zeta(3)?;
    let c0 = 8.0 * c.glaisher_a.ln() - 1.0 / 3.0 - (2.0 / 3.0) * c.euler_gamma;
    let c1 = PI.ln() + PI * PI / 18.0 - 2.0 - xi.ln();
    let mut sum = (2.0 / 3.0) * xi - c0 - c1 / xi + (0.5 + zeta3 / 6.0) / (xi * xi);
    let mut pow = 1.0 / (xi * xi * xi);
    for j in 3..=order {
        let jf = j as f64;
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        let coef = (jf - 2.0) / (jf * (jf - 1.0)) * riemann_zeta(j as u32 - 1)?
            + riemann_zeta(j as u32 + 1)? / 6.0;
        sum -= sign / 2f64.powi(j as i32 - 2) * coef * pow;
        pow /= xi;
    }
    Ok(sum)
}

/// The printed Δn series, read with the braced term multiplying the
/// alternating prefactor. Diverges for h ≥ 2.
fn delta_n_series_bracket(vac: &Vacuum, h: f64) -> Result<Option<f64>> {
    if h >= 2.0 {
        return Ok(None);
    }
    let c = &vac.constants;
    let zeta3 = riemann_zeta(3)?;
    let h2 = h * h;
    let mut sum = 1.0 / (3.0 * h)
        - (8.0 * c.glaisher_a.ln() - 1.0 / 3.0 - (2.0 / 3.0) * c.euler_gamma)
        - 2.0 * h * (PI.ln() + PI * PI / 18.0 - 2.0 + (2.0 * h).ln())
        + 2.0 * h2
        + (2.0 / 3.0) * zeta3 * h2
        + (2.0 / 3.0) * h.ln_1p()
        - (1.0 / 3.0) / (1.0 + h)
        - 2.0 / 3.0
        - (2.0 / 3.0) * h.ln()
        - (22.0 / 48.0) / h2;
    let mut hj = h2 * h;
    for j in 3..=400u32 {
        let jf = j as f64;
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        let zeta = if j < 60 { riemann_zeta(j + 1)? } else { 1.0 };
        let term = sign / 2f64.powi(j as i32 - 2) * ((jf - 2.0) + zeta / 6.0 + hj / (2.0 * jf));
        sum -= term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
        hj *= h;
    }
    Ok(Some(sum))
}

impl Vacuum {
    /// n_∥ = 1 + ½B²γ_FF·sin²θ; flagged above b = π/α.
    pub fn n_parallel_exact(
        &self,
        fp: FieldPoint,
        kin: &PhotonKinematics,
    ) -> Result<RefractionResult> {
        kin.validate()?;
        let w = self.weights(fp)?;
        Ok(RefractionResult {
            mode: Mode::Parallel,
            n: 1.0 + 0.5 * w.b2_gamma_ff * kin.sin2(),
            method: RefractionMethod::Exact,
            in_validity_domain: fp.b() <= PI / self.constants.alpha,
            alternate: None,
        })
    }

    /// n_∥ = 1/√(1 − κ_s sin²θ); `alternate` holds 1 + ½κ_s sin²θ.
    pub fn n_parallel_kappa(
        &self,
        fp: FieldPoint,
        kin: &PhotonKinematics,
    ) -> Result<RefractionResult> {
        kin.validate()?;
        let x = self.kappas(fp)?.kappa_s * kin.sin2();
        if x >= 1.0 {
            return Err(domain("n_parallel_kappa", x, "kappa_s sin^2(theta) < 1"));
        }
        Ok(RefractionResult {
            mode: Mode::Parallel,
            n: 1.0 / (1.0 - x).sqrt(),
            method: RefractionMethod::Kappa,
            in_validity_domain: true,
            alternate: Some(1.0 + 0.5 * x),
        })
    }

    /// n_⊥ = 1 + ½B²γ_GG·sin²θ; `alternate` holds √(1 + κ_p sin²θ).
    pub fn n_perp_exact(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<RefractionResult> {
        kin.validate()?;
        let w = self.weights(fp)?;
        let k = self.kappas(fp)?;
        let s2 = kin.sin2();
        Ok(RefractionResult {
            mode: Mode::Perpendicular,
            n: 1.0 + 0.5 * w.b2_gamma_gg * s2,
            method: RefractionMethod::Exact,
            in_validity_domain: true,
            alternate: Some((1.0 + k.kappa_p * s2).sqrt()),
        })
    }

    /// n_⊥ = √((1 + κ_p)/(1 + κ_s cos²θ)). This form does not reduce to 1
    /// at θ = 0, so it is only flagged valid at θ = π/2.
    pub fn n_perp_kappa(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<RefractionResult> {
        kin.validate()?;
        let k = self.kappas(fp)?;
        let cos2 = 1.0 - kin.sin2();
        Ok(RefractionResult {
            mode: Mode::Perpendicular,
            n: ((1.0 + k.kappa_p) / (1.0 + k.kappa_s * cos2)).sqrt(),
            method: RefractionMethod::Kappa,
            in_validity_domain: cos2.abs() < 1e-12,
            alternate: None,
        })
    }

    /// Weak-field series for n_⊥ through ξ^{2J}.
    pub fn n_perp_weak_series(
        &self,
        fp: FieldPoint,
        kin: &PhotonKinematics,
        order: usize,
    ) -> Result<RefractionResult> {
        kin.validate()?;
        let xi = fp.b();
        Ok(RefractionResult {
            mode: Mode::Perpendicular,
            n: 1.0 + self.alpha_over_4pi() * kin.sin2() * weak_bracket(xi, order.max(1)),
            method: RefractionMethod::WeakSeries,
            in_validity_domain: xi <= WEAK_SERIES_MAX_B,
            alternate: None,
        })
    }

    /// Strong-field series for n_⊥ through ξ^{−J}. Requires b > 0.
    pub fn n_perp_strong_series(
        &self,
        fp: FieldPoint,
        kin: &PhotonKinematics,
        order: usize,
    ) -> Result<RefractionResult> {
        kin.validate()?;
        fp.require_positive("n_perp_strong_series")?;
        let xi = fp.b();
        Ok(RefractionResult {
            mode: Mode::Perpendicular,
            n: 1.0 + self.alpha_over_4pi() * kin.sin2() * strong_bracket(self, xi, order)?,
            method: RefractionMethod::StrongSeries,
            in_validity_domain: xi > STRONG_SERIES_MIN_B,
            alternate: None,
        })
    }

    /// n_⊥ − n_∥ from the exact routes.
    pub fn delta_n(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<DeltaN> {
        let perp = self.n_perp_exact(fp, kin)?.n;
        let par = self.n_parallel_exact(fp, kin)?.n;
        let series = if fp.is_zero_field() {
            None
        } else {
            delta_n_series_bracket(self, fp.h())?.map(|s| self.alpha_over_4pi() * kin.sin2() * s)
        };
        Ok(DeltaN {
            value: perp - par,
            series,
        })
    }

    /// χ = (|k|/m)·Δn·l, in radians.
    pub fn faraday_rotation(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<f64> {
        Ok(kin.k_over_m * self.delta_n(fp, kin)?.value * kin.path_length)
    }

    /// v_⊥ = 1/n_⊥.
    pub fn v_perp(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<f64> {
        Ok(1.0 / self.n_perp_exact(fp, kin)?.n)
    }

    /// The closed-form estimate 1/(1 + (α/4π)(2/3 − 2h ln h + 2h ln 2π))²
    /// offered as a lower bound on v_⊥² at θ = π/2. Against the exact index
    /// it is a bound only for 0.0757 < b < 3.732.
    pub fn v_perp_sq_lower_bound(&self, fp: FieldPoint) -> Result<f64> {
        fp.require_positive("v_perp_sq_lower_bound")?;
        let h = fp.h();
        let d = 1.0
            + self.alpha_over_4pi() * (2.0 / 3.0 - 2.0 * h * h.ln() + 2.0 * h * (2.0 * PI).ln());
        Ok(1.0 / (d * d))
    }

    /// Large-field estimate of v_⊥² at θ = π/2 with e² = 4πα.
    pub fn hu_v_perp_sq(&self, fp: FieldPoint) -> Result<HighFieldVelocity> {
        fp.require_positive("hu_v_perp_sq")?;
        let c = self.constants.alpha / (3.0 * PI);
        let l = fp.b().ln();
        let den = 1.0 - c * (l - 1.79);
        if den <= 0.0 {
            return Err(Error::Domain {
                func: "hu_v_perp_sq",
                arg: fp.b(),
                expected: "field below the Landau-type pole of the estimate",
            });
        }
        Ok(HighFieldVelocity {
            v_perp_sq: (1.0 - c * (l - 0.79)) / den,
            applicable: fp.b() >= HU_MIN_B,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(b: f64) -> FieldPoint {
        FieldPoint::new(b).unwrap()
    }

    fn perp() -> PhotonKinematics {
        PhotonKinematics::default()
    }

    fn along() -> PhotonKinematics {
        PhotonKinematics {
            theta: 0.0,
            ..Default::default()
        }
    }

    #[test]
    fn kinematics_validation() {
        assert!(PhotonKinematics::new(-0.1, 1.0, 1.0).is_err());
        assert!(PhotonKinematics::new(0.1, 4.0, 1.0).is_err());
        assert!(PhotonKinematics::new(0.1, 1.0, -1.0).is_err());
        assert!(!PhotonKinematics::new(2.0, 1.0, 1.0)
            .unwrap()
            .is_low_frequency());
        assert_eq!(perp().sin2(), 1.0);
    }

    #[test]
    fn weak_bracket_leading_coefficient() {
        let xi = 1e-3;
        assert!((weak_bracket(xi, 1) / (xi * xi) - 14.0 / 45.0).abs() < 1e-15);
    }

    #[test]
    fn zero_angle_and_zero_field() {
        let vac = Vacuum::default();
        for b in [0.0, 0.3, 10.0] {
            assert_eq!(vac.n_perp_exact(fp(b), &along()).unwrap().n, 1.0);
            assert_eq!(vac.n_parallel_exact(fp(b), &along()).unwrap().n, 1.0);
            assert_eq!(vac.n_parallel_kappa(fp(b), &along()).unwrap().n, 1.0);
            assert_eq!(vac.delta_n(fp(b), &along()).unwrap().value, 0.0);
        }
        assert_eq!(vac.n_perp_exact(fp(0.0), &perp()).unwrap().n, 1.0);
        assert_eq!(vac.n_perp_weak_series(fp(0.0), &perp(), 8).unwrap().n, 1.0);
        assert_eq!(
            vac.n_perp_strong_series(fp(30.0), &along(), 20).unwrap().n,
            1.0
        );
    }

    #[test]
    fn weak_field_indices() {
        let vac = Vacuum::default();
        let a = vac.alpha_over_4pi();
        let b = 1e-3;
        let par = vac.n_parallel_exact(fp(b), &perp()).unwrap().n - 1.0;
        assert!((par / (b * b) / (a * 8.0 / 45.0) - 1.0).abs() < 1e-4);
        let b = 0.05;
        let n = vac.n_perp_exact(fp(b), &perp()).unwrap().n - 1.0;
        assert!((n / (b * b) / (a * 14.0 / 45.0) - 1.0).abs() < 0.01);
        let d = vac.delta_n(fp(1e-3), &perp()).unwrap().value;
        assert!((d / 1e-6 / (a * 6.0 / 45.0) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn weak_series_matches_exact() {
        let vac = Vacuum::default();
        let ex = vac.n_perp_exact(fp(0.1), &perp()).unwrap().n;
        let ws = vac.n_perp_weak_series(fp(0.1), &perp(), 8).unwrap();
        assert!(ws.in_validity_domain);
        assert!(((ws.n - 1.0) - (ex - 1.0)).abs() <= 1e-6 * (ex - 1.0).abs().max(1e-12) + 1e-16);
    }

    #[test]
    fn strong_series_matches_exact() {
        let vac = Vacuum::default();
        for b in [2.0, 10.0, 30.0] {
            let ex = vac.n_perp_exact(fp(b), &perp()).unwrap().n - 1.0;
            let ss = vac.n_perp_strong_series(fp(b), &perp(), 40).unwrap();
            assert!(ss.in_validity_domain);
            assert!(((ss.n - 1.0) / ex - 1.0).abs() < 1e-9, "b={b}");
        }
        let lead = vac.n_perp_strong_series(fp(0.4), &perp(), 40).unwrap();
        assert!(!lead.in_validity_domain);
    }

    #[test]
    fn kappa_forms() {
        let vac = Vacuum::default();
        let r = vac.n_parallel_kappa(fp(0.1), &perp()).unwrap();
        let k = vac.kappas(fp(0.1)).unwrap().kappa_s;
        let diff = r.n - r.alternate.unwrap();
        assert!(diff > 0.0 && diff < k * k);
        let r = vac.n_perp_exact(fp(1.0), &perp()).unwrap();
        let kp = vac.kappas(fp(1.0)).unwrap().kappa_p;
        assert!((r.n - r.alternate.unwrap()).abs() < kp * kp);
        let general = vac.n_perp_kappa(fp(1.0), &along()).unwrap();
        assert!(!general.in_validity_domain);
        assert!(
            vac.n_perp_kappa(fp(1.0), &perp())
                .unwrap()
                .in_validity_domain
        );
    }

    #[test]
    fn delta_n_sign_and_series_diagnostic() {
        let vac = Vacuum::default();
        let d = vac.delta_n(fp(1.0), &perp()).unwrap();
        assert!(d.value > 0.0);
        assert!(d.series.unwrap().is_finite());
        assert!(vac.delta_n(fp(0.1), &perp()).unwrap().series.is_none());
    }

    #[test]
    fn faraday_rotation_products() {
        let vac = Vacuum::default();
        let kin = PhotonKinematics::new(0.1, FRAC_PI_2, 1e6).unwrap();
        let chi = vac.faraday_rotation(fp(1.0), &kin).unwrap();
        let dn = vac.delta_n(fp(1.0), &kin).unwrap().value;
        assert!((chi - 1e5 * dn).abs() <= 1e-15 * chi.abs());
        let kin0 = PhotonKinematics {
            path_length: 0.0,
            ..kin
        };
        assert_eq!(vac.faraday_rotation(fp(1.0), &kin0).unwrap(), 0.0);
    }

    #[test]
    fn group_velocity() {
        let vac = Vacuum::default();
        assert_eq!(vac.v_perp(fp(0.0), &perp()).unwrap(), 1.0);
        for b in [0.01, 1.0, 30.0, 100.0] {
            assert!(vac.v_perp(fp(b), &perp()).unwrap() < 1.0);
        }
        // The closed-form bound holds only on roughly 0.0757 < b < 3.732.
        let holds = |b: f64| {
            let v = vac.v_perp(fp(b), &perp()).unwrap();
            v * v >= vac.v_perp_sq_lower_bound(fp(b)).unwrap()
        };
        for b in [0.08, 0.5, 1.0, 3.7] {
            assert!(holds(b), "b={b}");
        }
        for b in [0.07, 3.75, 30.0] {
            assert!(!holds(b), "b={b}");
        }
        let hu = vac.hu_v_perp_sq(fp(100.0)).unwrap();
        assert!(hu.applicable && hu.v_perp_sq < 1.0);
        assert!(!vac.hu_v_perp_sq(fp(1.0)).unwrap().applicable);
    }
}
