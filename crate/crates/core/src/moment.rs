//! The anomalous magnetic moment of a perpendicularly polarized photon,
//! μ = −d⟨H⟩/dB, in reduced form.
//!
//! μ̂ excludes the factor (|k|/m)·sin²θ; in Bohr magnetons the moment is
//! μ/μ_B = 2·μ̂·(|k|/m)·sin²θ. At large field μ̂ approaches (α/4π)(2/3).

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::lagrangian::{FieldPoint, STABLE_H_MIN};
use crate::optics::PhotonKinematics;
use crate::specfun::{
    digamma, digamma_remainder, hurwitz_zeta, hurwitz_zeta_deriv_minus1_with, lambert_w_with,
    ln_gamma, ln_gamma_remainder, polygamma, trigamma_remainder, LambertBranch,
};
use crate::Vacuum;

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Largest field for which the one-loop moment is trusted.
pub const ONE_LOOP_MAX_B: f64 = 30.0;
/// Upper end of the weak-field window.
pub const WEAK_MAX_B: f64 = 0.44;
/// The strong-field form is used above this field.
pub const STRONG_MIN_B: f64 = 0.5;

/// c₁ = ln π + π²/18 − 1.
pub fn c1() -> f64 {
    PI.ln() + PI * PI / 18.0 - 1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentMethod {
    Exact,
    Weak,
    Strong,
    Hurwitz,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResult {
    /// μ̂, including α/4π, excluding (|k|/m)·sin²θ.
    pub mu_reduced: f64,
    /// μ/μ_B = 2·μ̂·(|k|/m)·sin²θ.
    pub mu_bohr: f64,
    pub method: MomentMethod,
    pub in_validity_domain: bool,
}

/// ⟨H⟩ per photon in units of |k|: 1 − ½B²γ_GG·sin²θ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianPoint {
    pub b: f64,
    pub h_reduced: f64,
}

/// Outcome of one sign or identity check over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub points: usize,
    /// Field at which the check came closest to failing (or failed worst).
    pub worst_b: f64,
    /// Signed margin at `worst_b`; negative means violated.
    pub worst_margin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeReport {
    pub checks: Vec<CheckOutcome>,
}

impl DerivativeReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// The moment in Bohr magnetons next to the electron's anomalous moment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronComparison {
    pub mu_bohr: f64,
    /// α/(2π), the electron anomaly in Bohr magnetons.
    pub electron_anomaly_bohr: f64,
    pub ratio: f64,
    /// The large-field ratio, 2/3.
    pub asymptotic_ratio: f64,
    /// α/(3π), the large-field moment in Bohr magnetons at |k| = m, θ = π/2.
    pub asymptotic_mu_bohr: f64,
}

/// Analytic and finite-difference values of d/db ζ′(−1, 1/(2b)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    pub b: f64,
    pub analytic: f64,
    pub finite_difference: f64,
}

impl IdentityCheck {
    pub fn rel_error(&self) -> f64 {
        ((self.finite_difference - self.analytic) / self.analytic).abs()
    }
}

fn central_difference(f: impl Fn(f64) -> Result<f64>, x: f64, step: f64) -> Result<f64> {
    Ok((f(x + step)? - f(x - step)?) / (2.0 * step))
}

impl Vacuum {
    fn moment(
        &self,
        mu: f64,
        kin: &PhotonKinematics,
        method: MomentMethod,
        valid: bool,
    ) -> MomentResult {
        MomentResult {
            mu_reduced: mu,
            mu_bohr: 2.0 * mu * kin.k_over_m * kin.sin2(),
            method,
            in_validity_domain: valid,
        }
    }

    /// The bracketed μ̂/(α/4π) evaluated as printed.
    fn mu_brace_literal(&self, b: f64, h: f64) -> Result<f64> {
        let inner = b / 3.0 * polygamma(1, 1.0 + h)? + digamma(h)? - 2.0 * b * ln_gamma(h)?
            + b * LN_2PI
            + b
            + b * (2.0 * b).ln()
            - 1.0;
        Ok(2.0 / 3.0 + inner / (b * b * b))
    }

    /// The same brace through asymptotic remainders, free of the O(h³)
    /// cancellation at small field.
    fn mu_brace_stable(&self, h: f64) -> Result<f64> {
        let q = trigamma_remainder(h, 0)?;
        let s2 = ln_gamma_remainder(h, 1)?;
        let p2 = digamma_remainder(h, 1)?;
        Ok(-2.0 * h * h * (-(2.0 / 3.0) * q + 4.0 * s2 + 4.0 * h * p2))
    }

    /// μ̂ = d/db(½B²γ_GG). Zero at b = 0; flagged above b = 30.
    pub fn mu_exact(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<MomentResult> {
        kin.validate()?;
        if fp.is_zero_field() {
            return Ok(self.moment(0.0, kin, MomentMethod::Exact, true));
        }
        let brace = if fp.h() >= STABLE_H_MIN {
            self.mu_brace_stable(fp.h())?
        } else {
            self.mu_brace_literal(fp.b(), fp.h())?
        };
        let valid = fp.b() <= ONE_LOOP_MAX_B;
        Ok(self.moment(
            self.alpha_over_4pi() * brace,
            kin,
            MomentMethod::Exact,
            valid,
        ))
    }

    /// μ̂ from the printed form at every field, for cross-checks.
    pub fn mu_exact_literal(&self, fp: FieldPoint) -> Result<f64> {
        fp.require_positive("mu_exact_literal")?;
        Ok(self.alpha_over_4pi() * self.mu_brace_literal(fp.b(), fp.h())?)
    }

    /// (α/4π)(28/45)(b − (52/49)b³), valid for b ≤ 0.44.
    pub fn mu_weak(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<MomentResult> {
        kin.validate()?;
        let b = fp.b();
        let mu = self.alpha_over_4pi() * (28.0 / 45.0) * (b - (52.0 / 49.0) * b * b * b);
        Ok(self.moment(mu, kin, MomentMethod::Weak, b <= WEAK_MAX_B))
    }

    /// (α/4π)[2/3 + (c₁ − ln b)/b²], valid for b > 0.5.
    pub fn mu_strong(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<MomentResult> {
        kin.validate()?;
        fp.require_positive("mu_strong")?;
        let b = fp.b();
        let mu = self.alpha_over_4pi() * (2.0 / 3.0 + (c1() - b.ln()) / (b * b));
        Ok(self.moment(mu, kin, MomentMethod::Strong, b > STRONG_MIN_B))
    }

    /// The Hurwitz-zeta form of μ̂, with the divergent ζ(1, a) replaced by
    /// its finite part −ψ(a). It does not reproduce [`Vacuum::mu_exact`];
    /// the result is always flagged out of validity.
    pub fn mu_hurwitz(&self, fp: FieldPoint, kin: &PhotonKinematics) -> Result<MomentResult> {
        kin.validate()?;
        fp.require_positive("mu_hurwitz")?;
        let (b, h) = (fp.b(), fp.h());
        let zeta2 = hurwitz_zeta(2.0, 1.0 + h)?;
        let zeta1_fp = -digamma(1.0 + h)?;
        let inner = (2.0 / 3.0) * b * zeta2 - zeta1_fp - 2.0 * b * ln_gamma(h)?
            + b * (LN_2PI + 1.0 - h.ln())
            - 1.0;
        let mu = self.alpha_over_4pi() * (2.0 / 3.0 + inner / (b * b * b));
        Ok(self.moment(mu, kin, MomentMethod::Hurwitz, false))
    }

    /// Field b on the given Lambert-W branch at which the strong-field
    /// form takes the value `mu_reduced`.
    ///
    /// The strong-field curve has its minimum at b* = e^{c₁+½}; branch 0
    /// returns the solution with b ≤ b* and branch −1 the one with b ≥ b*.
    pub fn invert_b_from_mu(&self, mu_reduced: f64, branch: i32) -> Result<FieldPoint> {
        let branch = LambertBranch::try_from(branch)?;
        if !mu_reduced.is_finite() {
            return Err(domain("invert_b_from_mu", mu_reduced, "finite moment"));
        }
        let c1 = c1();
        let mu_n = mu_reduced / self.alpha_over_4pi() - 2.0 / 3.0;
        let z = 2.0 * (2.0 * c1).exp() * mu_n;
        let w = lambert_w_with(branch, z, &self.precision).map_err(|_| {
            domain(
                "invert_b_from_mu",
                mu_reduced,
                "moment inside the range of the chosen branch",
            )
        })?;
        FieldPoint::new((c1 - 0.5 * w).exp())
    }

    /// Inversion from a moment in Bohr magnetons.
    pub fn invert_b_from_mu_bohr(
        &self,
        mu_bohr: f64,
        kin: &PhotonKinematics,
        branch: i32,
    ) -> Result<FieldPoint> {
        kin.validate()?;
        let scale = 2.0 * kin.k_over_m * kin.sin2();
        if scale == 0.0 {
            return Err(domain(
                "invert_b_from_mu_bohr",
                scale,
                "(k/m) sin^2(theta) > 0",
            ));
        }
        self.invert_b_from_mu(mu_bohr / scale, branch)
    }

    /// Both branch solutions, so that the two-fold ambiguity is visible.
    pub fn invert_both_branches(&self, mu_reduced: f64) -> [Result<FieldPoint>; 2] {
        [
            self.invert_b_from_mu(mu_reduced, 0),
            self.invert_b_from_mu(mu_reduced, -1),
        ]
    }

    /// ⟨H⟩/|k| = 1 − ½B²γ_GG·sin²θ.
    pub fn hamiltonian_expectation(
        &self,
        fp: FieldPoint,
        kin: &PhotonKinematics,
    ) -> Result<HamiltonianPoint> {
        kin.validate()?;
        let w = self.weights(fp)?;
        Ok(HamiltonianPoint {
            b: fp.b(),
            h_reduced: 1.0 - 0.5 * w.b2_gamma_gg * kin.sin2(),
        })
    }

    /// The analytic derivative of ζ′(−1, 1/(2b)) against a central
    /// difference.
    pub fn zeta_derivative_identity(&self, b: f64) -> Result<IdentityCheck> {
        let fp = FieldPoint::new(b)?;
        fp.require_positive("zeta_derivative_identity")?;
        let h = fp.h();
        let analytic = 0.5 * (-ln_gamma(h)? + 0.5 * LN_2PI - h + 0.5) / (b * b);
        let step = 1e-4 * b;
        let finite_difference = central_difference(
            |x| hurwitz_zeta_deriv_minus1_with(0.5 / x, &self.precision),
            b,
            step,
        )?;
        Ok(IdentityCheck {
            b,
            analytic,
            finite_difference,
        })
    }

    /// Finite-difference sign and bound checks on a grid in (0, 30]:
    /// dμ̂/db > 0, d²⟨H⟩/db² ≤ 0, the weak-field lower bound on dμ̂/db for
    /// b ≤ 0.44, and the ζ′(−1, ·) derivative identity to 1e-6.
    pub fn derivative_checks(&self, grid: &[f64]) -> Result<DerivativeReport> {
        let unit = PhotonKinematics {
            k_over_m: 1.0,
            ..Default::default()
        };
        let mu =
            |b: f64| -> Result<f64> { Ok(self.mu_exact(FieldPoint::new(b)?, &unit)?.mu_reduced) };
        let ham = |b: f64| -> Result<f64> {
            Ok(self
                .hamiltonian_expectation(FieldPoint::new(b)?, &unit)?
                .h_reduced)
        };
        let a = self.alpha_over_4pi();

        let mut slope = Tracker::new("dmu/db > 0");
        let mut concave = Tracker::new("d2H/db2 <= 0");
        let mut bound = Tracker::new("dmu/db >= weak-field bound");
        let mut identity = Tracker::new("zeta derivative identity");
        for &b in grid {
            if !(b > 0.0 && b <= ONE_LOOP_MAX_B) {
                return Err(domain("derivative_checks", b, "grid inside (0, 30]"));
            }
            let step = 1e-3 * b;
            let dmu = central_difference(mu, b, step)?;
            slope.record(b, dmu / a, 0.0);

            let d2h = (ham(b + step)? - 2.0 * ham(b)? + ham(b - step)?) / (step * step);
            concave.record(b, -d2h / a, -1e-9);

            if b <= WEAK_MAX_B {
                let lower = a * (28.0 / 45.0 - (156.0 / 49.0) * b * b);
                bound.record(b, (dmu - lower) / a, 0.0);
            }

            let id = self.zeta_derivative_identity(b)?;
            identity.record(b, 1e-6 - id.rel_error(), 0.0);
        }
        Ok(DerivativeReport {
            checks: vec![
                slope.finish(),
                concave.finish(),
                bound.finish(),
                identity.finish(),
            ],
        })
    }

    /// The moment in Bohr magnetons against the electron's anomaly α/(2π).
    pub fn electron_moment_comparison(
        &self,
        fp: FieldPoint,
        kin: &PhotonKinematics,
    ) -> Result<ElectronComparison> {
        let mu = self.mu_exact(fp, kin)?;
        let alpha = self.constants.alpha;
        let electron = alpha / (2.0 * PI);
        Ok(ElectronComparison {
            mu_bohr: mu.mu_bohr,
            electron_anomaly_bohr: electron,
            ratio: mu.mu_bohr / electron,
            asymptotic_ratio: 2.0 / 3.0,
            asymptotic_mu_bohr: alpha / (3.0 * PI),
        })
    }
}

/// Tracks the smallest margin seen by one check. A check passes while every
/// margin stays above `floor`.
struct Tracker {
    name: &'static str,
    points: usize,
    worst_b: f64,
    worst_margin: f64,
    passed: bool,
}

impl Tracker {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            points: 0,
            worst_b: f64::NAN,
            worst_margin: f64::INFINITY,
            passed: true,
        }
    }

    fn record(&mut self, b: f64, margin: f64, floor: f64) {
        self.points += 1;
        if margin < self.worst_margin || margin.is_nan() {
            self.worst_margin = margin;
            self.worst_b = b;
        }
        if margin.is_nan() || margin <= floor {
            self.passed = false;
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            passed: self.passed,
            points: self.points,
            worst_b: self.worst_b,
            worst_margin: self.worst_margin,
        }
    }
}
