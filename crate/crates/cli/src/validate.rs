//! The acceptance suite behind `qedvac validate`.
//!
//! Each numbered criterion yields exactly one pass/fail entry. Informational
//! entries carry cross-checks that are reported but never gate the exit code.

use std::f64::consts::{E, FRAC_PI_2, PI};
use std::fmt;

use qedvac::lagrangian::proper_time_bracket;
use qedvac::moment::c1;
use qedvac::specfun::{
    digamma, hurwitz_zeta, hurwitz_zeta_deriv_minus1_with, lambert_w, ln_gamma, polygamma,
    riemann_zeta, zeta_deriv_minus1_integral,
};
use qedvac::{FieldPoint, PhotonKinematics, QuadratureConfig, Vacuum};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::Format;
use crate::config::Physics;
use crate::scan::{self, Cell, ScanRequest};
use crate::CliError;

/// Lowest field at which the strong-field moment is held to the regime band.
pub const STRONG_REGIME_MIN_B: f64 = 6.0;
/// Highest field at which the weak-field moment is held to the regime band.
pub const WEAK_REGIME_MAX_B: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub three_route: f64,
    pub weak_coefficient: f64,
    pub moment_derivative: f64,
    pub ratio: f64,
    pub asymptote_gap: f64,
    pub integrand: f64,
    pub zeta_routes: f64,
    pub zeta_identity: f64,
    pub inversion: f64,
    pub regime: f64,
    pub specfun: f64,
    pub figure1: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            three_route: 1e-8,
            weak_coefficient: 0.01,
            moment_derivative: 1e-6,
            ratio: 0.10,
            asymptote_gap: 0.05,
            integrand: 1e-14,
            zeta_routes: 1e-8,
            zeta_identity: 1e-6,
            inversion: 1e-10,
            regime: 0.01,
            specfun: 1e-11,
            figure1: 1e-12,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<(), CliError> {
        let all = [
            self.three_route,
            self.weak_coefficient,
            self.moment_derivative,
            self.ratio,
            self.asymptote_gap,
            self.integrand,
            self.zeta_routes,
            self.zeta_identity,
            self.inversion,
            self.regime,
            self.specfun,
            self.figure1,
        ];
        if all.iter().all(|t| *t >= 0.0 && t.is_finite()) {
            Ok(())
        } else {
            Err(CliError::Config(
                "tolerances must be finite and non-negative".into(),
            ))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    /// "C1" through "C12" for gated checks, empty for informational ones.
    pub id: String,
    pub name: String,
    pub status: Status,
    pub measured: f64,
    pub tolerance: Option<f64>,
    /// The physical statement the check stands for.
    pub anchor: String,
    pub detail: String,
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = if self.id.is_empty() {
            self.name.clone()
        } else {
            format!("{} {}", self.id, self.name)
        };
        write!(
            f,
            "[{}] {label}: measured {:.6e}",
            self.status, self.measured
        )?;
        if let Some(t) = self.tolerance {
            write!(f, ", tolerance {t:.1e}")?;
        }
        write!(f, " ({})", self.anchor)?;
        if !self.detail.is_empty() {
            write!(f, "\n       {}", self.detail)?;
        }
        Ok(())
    }
}

/// A gated check plus any informational notes produced alongside it.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub check: Entry,
    pub notes: Vec<Entry>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.check.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub entries: Vec<Entry>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        serde_json::to_string_pretty(self).map_err(|e| CliError::Internal(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        let gated = self.entries.iter().filter(|e| e.status != Status::Info);
        let failed = gated.clone().filter(|e| e.status == Status::Fail).count();
        s.push_str(&format!("{} checks, {failed} failed", gated.count()));
        s
    }
}

fn check(
    id: usize,
    name: &str,
    passed: bool,
    measured: f64,
    tolerance: f64,
    anchor: &str,
    detail: String,
) -> Entry {
    Entry {
        id: format!("C{id}"),
        name: name.into(),
        status: if passed { Status::Pass } else { Status::Fail },
        measured,
        tolerance: Some(tolerance),
        anchor: anchor.into(),
        detail,
    }
}

fn note(name: &str, measured: f64, anchor: &str, detail: String) -> Entry {
    Entry {
        id: String::new(),
        name: name.into(),
        status: Status::Info,
        measured,
        tolerance: None,
        anchor: anchor.into(),
        detail,
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| match i {
            0 => lo,
            i if i == n - 1 => hi,
            i => (lo.ln() + (hi / lo).ln() * i as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

fn lin_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// Largest value of `f` over `xs`, with the abscissa where it occurred.
fn worst(xs: &[f64], f: impl Fn(f64) -> qedvac::Result<f64> + Sync) -> qedvac::Result<(f64, f64)> {
    let vals: Vec<(f64, f64)> = xs
        .par_iter()
        .map(|&x| f(x).map(|v| (v, x)))
        .collect::<qedvac::Result<_>>()?;
    Ok(vals
        .into_iter()
        .fold((f64::NEG_INFINITY, f64::NAN), |acc, v| {
            if v.0 > acc.0 || v.0.is_nan() {
                v
            } else {
                acc
            }
        }))
}

fn unit_kinematics() -> PhotonKinematics {
    PhotonKinematics {
        k_over_m: 1.0,
        theta: FRAC_PI_2,
        path_length: 1.0,
    }
}

fn mu(vac: &Vacuum, b: f64) -> qedvac::Result<f64> {
    Ok(vac
        .mu_exact(FieldPoint::new(b)?, &unit_kinematics())?
        .mu_reduced)
}

pub fn three_route(vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let (dev, at) = worst(&log_grid(0.01, 30.0, 50), |b| {
        let fp = FieldPoint::new(b)?;
        Ok(rel(
            vac.b2_gamma_gg_closed(fp)?,
            vac.b2_gamma_gg_quadrature(fp, &cfg)?,
        ))
    })?;
    let mut notes = Vec::new();
    for b in [1.0, 10.0] {
        let fp = FieldPoint::new(b)?;
        let closed = vac.b2_gamma_gg_closed(fp)?;
        let alt = vac.b2_gamma_gg_karbstein(fp)?;
        notes.push(note(
            &format!("zeta'(0) representation of B^2 gamma_GG at b = {b}"),
            rel(alt, closed),
            "third route, taken verbatim; deviation recorded, not asserted",
            format!("closed {closed:.12e}, alternative {alt:.12e}"),
        ));
    }
    Ok(Outcome {
        check: check(
            1,
            "three-route B^2 gamma_GG agreement",
            dev <= tol.three_route,
            dev,
            tol.three_route,
            "closed form in Hurwitz zeta derivatives equals the proper-time integral",
            format!(
                "max relative deviation over 50 log-spaced b in [0.01, 30], worst at b = {at:.4}"
            ),
        ),
        notes,
    })
}

pub fn weak_coefficient(vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let b = 0.05;
    let kin = unit_kinematics();
    let n = vac.n_perp_exact(FieldPoint::new(b)?, &kin)?.n;
    let coeff = (n - 1.0) / (kin.sin2() * b * b);
    let target = vac.alpha_over_4pi() * 14.0 / 45.0;
    let dev = rel(coeff, target);
    Ok(Outcome {
        check: check(
            2,
            "weak-field coefficient of n_perp",
            dev <= tol.weak_coefficient,
            dev,
            tol.weak_coefficient,
            "n_perp - 1 starts as (alpha/4pi)(14/45) b^2 sin^2(theta)",
            format!(
                "(n_perp - 1)/b^2 = {coeff:.10e} at b = 0.05, leading coefficient {target:.10e}"
            ),
        ),
        notes: vec![],
    })
}

pub fn moment_derivative(vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let kin = unit_kinematics();
    let ham = |b: f64| -> qedvac::Result<f64> {
        Ok(vac
            .hamiltonian_expectation(FieldPoint::new(b)?, &kin)?
            .h_reduced)
    };
    let (dev, at) = worst(&log_grid(0.05, 29.9, 60), |b| {
        let d = 1e-2 * b;
        let slope = (ham(b - 2.0 * d)? - 8.0 * ham(b - d)? + 8.0 * ham(b + d)? - ham(b + 2.0 * d)?)
            / (12.0 * d);
        Ok(rel(-slope, mu(vac, b)?))
    })?;
    Ok(Outcome {
        check: check(
            3,
            "moment equals minus the field derivative of <H>",
            dev <= tol.moment_derivative,
            dev,
            tol.moment_derivative,
            "mu = -d<H>/dB",
            format!("60 log-spaced b in [0.05, 29.9], five-point stencil, worst at b = {at:.4}"),
        ),
        notes: vec![],
    })
}

pub fn ratio_claim(vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let ratio = mu(vac, 30.0)? / mu(vac, 0.5)?;
    let dev = rel(ratio, 8.0 / 3.0);
    Ok(Outcome {
        check: check(
            4,
            "moment ratio mu(30)/mu(0.5) against 8/3",
            dev <= tol.ratio,
            dev,
            tol.ratio,
            "the moment grows by about 8/3 between b = 0.5 and b = 30",
            format!("ratio = {ratio:.6}, relative offset from 8/3 shown as measured"),
        ),
        notes: vec![],
    })
}

pub fn asymptote_gap(vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let a = vac.alpha_over_4pi();
    let gap = 1.0 - mu(vac, 30.0)? / (a * 2.0 / 3.0);
    let strong = vac
        .mu_strong(FieldPoint::new(30.0)?, &unit_kinematics())?
        .mu_reduced;
    let strong_gap = 1.0 - strong / (a * 2.0 / 3.0);
    Ok(Outcome {
        check: check(
            5,
            "gap to the large-field asymptote at b = 30",
            gap > 0.0 && gap <= tol.asymptote_gap,
            gap,
            tol.asymptote_gap,
            "at b = 30 the moment sits a few percent below (alpha/4pi)(2/3)",
            format!("strong-field form gives {strong_gap:.4e}; a 3% gap is commonly cited"),
        ),
        notes: vec![],
    })
}

pub fn positivity(vac: &Vacuum, _tol: &Tolerances) -> qedvac::Result<Outcome> {
    let a = vac.alpha_over_4pi();
    let mut grid: Vec<f64> = (1..=100).map(|i| 0.3 * i as f64).collect();
    grid.extend((1..=44).map(|i| 0.01 * i as f64));
    let (neg_mu, _) = worst(&grid, |b| Ok(-mu(vac, b)? / a))?;
    let report = vac.derivative_checks(&grid)?;
    let slope = &report.checks[0];
    let bound = &report.checks[2];
    let margin = (-neg_mu).min(slope.worst_margin).min(bound.worst_margin);
    Ok(Outcome {
        check: check(
            6,
            "moment positive and increasing, weak-field slope bound",
            -neg_mu > 0.0 && slope.passed && bound.passed,
            margin,
            0.0,
            "mu > 0 and dmu/db > 0 on (0, 30]; dmu/db >= (alpha/4pi)(28/45 - 156/49 b^2) on (0, 0.44]",
            format!(
                "min mu/(alpha/4pi) {:.4e}; slope margin {:.4e} at b = {:.3}; bound margin {:.4e} at b = {:.3}",
                -neg_mu, slope.worst_margin, slope.worst_b, bound.worst_margin, bound.worst_b
            ),
        ),
        notes: vec![],
    })
}

pub fn integrand(_vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let n = 10_000;
    let (min_t, min_g) = (1..=n)
        .map(|i| 100.0 * i as f64 / n as f64)
        .map(|t| (t, proper_time_bracket(t)))
        .fold((f64::NAN, f64::INFINITY), |acc, v| {
            if v.1 < acc.1 || v.1.is_nan() {
                v
            } else {
                acc
            }
        });
    Ok(Outcome {
        check: check(
            7,
            "proper-time integrand non-negative",
            min_g >= -tol.integrand,
            min_g,
            tol.integrand,
            "g(t) = -3coth(t)/(2t) + 3/(2sinh^2 t) + t coth(t) >= 0",
            format!("minimum over 10^4 points in (0, 100] at t = {min_t}"),
        ),
        notes: vec![],
    })
}

pub fn zeta_routes(vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let (dev, at) = worst(&log_grid(0.1, 50.0, 60), |h| {
        let series = hurwitz_zeta_deriv_minus1_with(h, &vac.precision)?;
        Ok(rel(zeta_deriv_minus1_integral(h, &cfg)?, series))
    })?;
    let (id_dev, id_at) = worst(&log_grid(0.05, 30.0, 40), |b| {
        Ok(vac.zeta_derivative_identity(b)?.rel_error())
    })?;
    Ok(Outcome {
        check: check(
            8,
            "zeta'(-1, h) integral and asymptotic routes",
            dev <= tol.zeta_routes && id_dev <= tol.zeta_identity,
            dev,
            tol.zeta_routes,
            "Binet-type integral and Bernoulli series with recurrence give the same zeta'(-1, h)",
            format!(
                "worst at h = {at:.4}; derivative identity in b: max {id_dev:.3e} at b = {id_at:.4} (tolerance {:.1e})",
                tol.zeta_identity
            ),
        ),
        notes: vec![],
    })
}

pub fn inversion(vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let b_star = (c1() + 0.5).exp();
    let kin = unit_kinematics();
    let (dev, at) = worst(&lin_grid(1.0, 30.0, 20), |b| {
        let m = vac.mu_strong(FieldPoint::new(b)?, &kin)?.mu_reduced;
        let branch = if b <= b_star { 0 } else { -1 };
        Ok(rel(vac.invert_b_from_mu(m, branch)?.b(), b))
    })?;
    Ok(Outcome {
        check: check(
            9,
            "Lambert-W inversion round trip",
            dev <= tol.inversion,
            dev,
            tol.inversion,
            "the strong-field moment inverts in closed form through Lambert W",
            format!("20 points b in [1, 30], branch 0 below b* = {b_star:.6}, branch -1 above; worst at b = {at:.4}"),
        ),
        notes: vec![],
    })
}

pub fn regime(vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let kin = unit_kinematics();
    let (weak, weak_at) = worst(&lin_grid(0.01, WEAK_REGIME_MAX_B, 20), |b| {
        Ok(rel(
            vac.mu_weak(FieldPoint::new(b)?, &kin)?.mu_reduced,
            mu(vac, b)?,
        ))
    })?;
    let (strong, strong_at) = worst(&lin_grid(STRONG_REGIME_MIN_B, 30.0, 25), |b| {
        Ok(rel(
            vac.mu_strong(FieldPoint::new(b)?, &kin)?.mu_reduced,
            mu(vac, b)?,
        ))
    })?;
    let at3 = rel(
        vac.mu_strong(FieldPoint::new(3.0)?, &kin)?.mu_reduced,
        mu(vac, 3.0)?,
    );
    Ok(Outcome {
        check: check(
            10,
            "weak and strong forms against the exact moment",
            weak <= tol.regime && strong <= tol.regime,
            weak.max(strong),
            tol.regime,
            "the weak form holds at small b and the strong form at large b",
            format!(
                "weak max {weak:.3e} (b = {weak_at:.3}) for b <= {WEAK_REGIME_MAX_B}; strong max {strong:.3e} (b = {strong_at:.3}) for b >= {STRONG_REGIME_MIN_B}"
            ),
        ),
        notes: vec![note(
            "strong-field moment at b = 3",
            at3,
            "the strong form is calibrated to hold to 1% only from b = 6",
            "relative deviation from the exact moment".into(),
        )],
    })
}

fn close_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

pub fn special_functions(_vac: &Vacuum, tol: &Tolerances) -> qedvac::Result<Outcome> {
    let xs = log_grid(1e-3, 99.9, 400);
    let (gamma_family, at) = worst(&xs, |x| {
        let lg = close_err(ln_gamma(x + 1.0)? - ln_gamma(x)?, x.ln());
        let dg = close_err(digamma(x + 1.0)?, digamma(x)? + 1.0 / x);
        let tg = rel(polygamma(1, x)?, hurwitz_zeta(2.0, x)?);
        Ok(lg.max(dg).max(tg))
    })?;
    let (zeta_rec, _) = worst(&log_grid(0.01, 50.0, 200), |h| {
        let lhs = hurwitz_zeta_deriv_minus1_with(h + 1.0, &Default::default())?
            - hurwitz_zeta_deriv_minus1_with(h, &Default::default())?;
        Ok(close_err(lhs, h * h.ln()))
    })?;
    let mut zs: Vec<(i32, f64)> = log_grid(1e-12, 1e6, 200)
        .into_iter()
        .map(|z| (0, z))
        .collect();
    zs.extend(
        lin_grid(-1.0 / E, -1e-12, 200)
            .into_iter()
            .flat_map(|z| [(0, z), (-1, z)]),
    );
    let lambert = zs
        .iter()
        .map(|&(k, z)| {
            let w = lambert_w(k, z)?;
            Ok((w * w.exp() - z).abs() / z.abs().max(1.0))
        })
        .collect::<qedvac::Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let mut inequality = true;
    for h in log_grid(0.1, 50.0, 200) {
        let rhs = -1.0 / h.powi(2) + 1.0 / h.powi(3) - 0.5 / h.powi(4) + 1.0 / (6.0 * h.powi(6));
        inequality &= polygamma(2, 1.0 + h)? <= rhs;
    }
    let known = [
        close_err(ln_gamma(0.5)?, 0.5 * PI.ln()),
        close_err(digamma(1.0)?, -qedvac::specfun::EULER_GAMMA),
        close_err(polygamma(1, 1.0)?, PI * PI / 6.0),
        close_err(riemann_zeta(4)?, PI.powi(4) / 90.0),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    let passed = gamma_family <= tol.specfun
        && zeta_rec <= 1e-10
        && lambert <= 1e-13
        && inequality
        && known <= 1e-14;
    Ok(Outcome {
        check: check(
            11,
            "special-function identities",
            passed,
            gamma_family,
            tol.specfun,
            "log-gamma and digamma recurrences, trigamma = zeta(2, x), zeta'(-1) recurrence, Lambert W residual, psi'' bound",
            format!(
                "gamma family worst at x = {at:.4}; zeta'(-1) recurrence {zeta_rec:.2e} (1e-10); Lambert residual {lambert:.2e} (1e-13); psi'' bound {}; known values {known:.2e}",
                if inequality { "holds" } else { "violated" }
            ),
        ),
        notes: vec![],
    })
}

pub fn figure1(physics: &Physics, tol: &Tolerances) -> Result<Outcome, CliError> {
    let rows = scan::run(&ScanRequest::figure1(*physics, Format::Csv))?;
    let mut h = Vec::with_capacity(rows.len());
    for row in &rows {
        match row.cells[1] {
            Cell::Num(v) => h.push(v),
            _ => {
                return Err(CliError::Internal(format!(
                    "figure1 row failed: {:?}",
                    row.errors
                )))
            }
        }
    }
    let rise = h
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::NEG_INFINITY, f64::max);
    let bend = h
        .windows(3)
        .map(|w| w[2] - 2.0 * w[1] + w[0])
        .fold(f64::NEG_INFINITY, f64::max);
    let measured = rise.max(bend);
    Ok(Outcome {
        check: check(
            12,
            "reduced Hamiltonian curve shape",
            measured <= tol.figure1,
            measured,
            tol.figure1,
            "<H>/|k| falls with b and is concave on [0, 30]",
            format!("300 points; largest first difference {rise:.3e}, largest second difference {bend:.3e}"),
        ),
        notes: vec![note(
            "stated shape of this curve",
            measured,
            "the curve is sometimes described as increasing and convex; the computed signs are falling and concave",
            "noted only, not asserted".into(),
        )],
    })
}

fn extra_notes(vac: &Vacuum) -> qedvac::Result<Vec<Entry>> {
    let kin = unit_kinematics();
    let fp1 = FieldPoint::new(1.0)?;
    let hurwitz = rel(vac.mu_hurwitz(fp1, &kin)?.mu_reduced, mu(vac, 1.0)?);
    let dn = vac.delta_n(fp1, &kin)?;
    let fp100 = FieldPoint::new(100.0)?;
    let hu = vac.hu_v_perp_sq(fp100)?.v_perp_sq;
    let exact = vac.v_perp(fp100, &kin)?.powi(2);
    let e = vac.electron_moment_comparison(FieldPoint::new(30.0)?, &kin)?;
    Ok(vec![
        note(
            "Hurwitz-zeta form of the moment at b = 1",
            hurwitz,
            "the zeta(1, a) term diverges; its finite part does not reproduce the moment",
            "relative deviation from the exact moment".into(),
        ),
        note(
            "delta-n series at b = 1",
            dn.series_deviation()
                .map_or(f64::NAN, |d| (d / dn.value).abs()),
            "series for n_perp - n_par read as a product",
            format!("exact {:.10e}", dn.value),
        ),
        note(
            "high-field velocity estimate at b = 100",
            rel(hu, exact),
            "v_perp^2 estimate from the running-coupling form",
            format!("estimate {hu:.12e}, exact {exact:.12e}"),
        ),
        note(
            "photon moment over electron anomaly at b = 30, k = m",
            e.ratio,
            "approaches 2/3 at large field",
            format!(
                "mu = {:.6e} Bohr magnetons, electron anomaly {:.6e}",
                e.mu_bohr, e.electron_anomaly_bohr
            ),
        ),
        note(
            "closed-form lower bound on v_perp^2",
            0.0,
            "holds against the exact index only for 0.0757 < b < 3.732",
            "recorded, not asserted".into(),
        ),
    ])
}

/// Runs all twelve criteria and the informational cross-checks.
pub fn run_suite(physics: &Physics, tol: &Tolerances) -> Result<ValidationReport, CliError> {
    let vac = physics.vacuum()?;
    type Criterion = fn(&Vacuum, &Tolerances) -> qedvac::Result<Outcome>;
    let criteria: [Criterion; 11] = [
        three_route,
        weak_coefficient,
        moment_derivative,
        ratio_claim,
        asymptote_gap,
        positivity,
        integrand,
        zeta_routes,
        inversion,
        regime,
        special_functions,
    ];
    let mut outcomes = criteria
        .par_iter()
        .map(|c| c(&vac, tol))
        .collect::<qedvac::Result<Vec<_>>>()?;
    outcomes.push(figure1(physics, tol)?);
    let mut entries: Vec<Entry> = outcomes.iter().map(|o| o.check.clone()).collect();
    entries.extend(outcomes.into_iter().flat_map(|o| o.notes));
    entries.extend(extra_notes(&vac)?);
    Ok(ValidationReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_inclusive() {
        let g = log_grid(0.1, 50.0, 5);
        assert_eq!(g[0], 0.1);
        assert_eq!(g[4], 50.0);
        assert_eq!(lin_grid(1.0, 3.0, 3), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn entry_display_has_status_and_tolerance() {
        let e = check(3, "x", false, 2e-6, 1e-6, "anchor", String::new());
        let s = e.to_string();
        assert!(s.starts_with("[FAIL] C3 x: measured 2.000000e-6"));
        assert!(s.contains("tolerance 1.0e-6"));
    }

    #[test]
    fn negative_tolerance_rejected() {
        let t = Tolerances {
            ratio: -1.0,
            ..Default::default()
        };
        assert!(t.validate().is_err());
    }
}
