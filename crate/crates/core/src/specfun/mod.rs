//! Special-function kernel written from scratch for this crate: log-gamma,
//! digamma and the first two polygammas, Hurwitz and Riemann zeta values,
//! the Hurwitz zeta s-derivatives at s = 0 and s = -1, Bernoulli numbers and
//! the real branches of Lambert W.
//!
//! All functions are pure. The only shared state is a lazily built,
//! immutable table of Bernoulli numbers and zeta values.

mod bernoulli;
mod gamma;
mod lambert;
mod zeta;

pub use bernoulli::{bernoulli_exact, bernoulli_number, bernoulli_poly2, bernoulli_sequence};
pub use gamma::{
    digamma, digamma_remainder, ln_gamma, ln_gamma_remainder, polygamma, trigamma_remainder,
    HALF_LN_2PI,
};
pub use lambert::{lambert_w, lambert_w_with, LambertBranch, BRANCH_POINT as LAMBERT_BRANCH_POINT};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_deriv_minus1, hurwitz_zeta_deriv_minus1_with, riemann_zeta,
    zeta_deriv_minus1_asymptotic_base, zeta_deriv_minus1_integral, zeta_deriv_minus1_remainder,
    zeta_deriv_zero,
};

pub(crate) use bernoulli::b as bernoulli_unchecked;

use crate::error::{Error, Result};

/// Physical and mathematical constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Fine-structure constant (CODATA 2018 by default).
    pub alpha: f64,
    pub euler_gamma: f64,
    /// Glaisher–Kinkelin constant A, with ln A = 1/12 − ζ′(−1).
    pub glaisher_a: f64,
    /// Critical field m²/e in Gauss. Display only.
    pub b_cr_gauss: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Self {
            alpha: 7.297_352_569_3e-3,
            euler_gamma: EULER_GAMMA,
            glaisher_a: GLAISHER_A,
            b_cr_gauss: 4.414e13,
        }
    }
}

impl Constants {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 0.01) {
            return Err(Error::Config(format!(
                "alpha must lie in (0, 0.01), got {}",
                self.alpha
            )));
        }
        Ok(())
    }
}

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const GLAISHER_A: f64 = 1.282_427_129_100_622_6;

/// Precision knobs for the special-function kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionConfig {
    /// Relative stopping tolerance for iterative solvers (Lambert W).
    pub rel_tol: f64,
    /// Absolute stopping tolerance for iterative solvers.
    pub abs_tol: f64,
    /// Number of Bernoulli terms in the ζ′(−1, h) asymptotic series.
    pub series_terms_max: usize,
    /// ζ′(−1, h) is shifted upward by unit steps until h reaches this value.
    pub recurrence_shift_threshold: f64,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self {
            rel_tol: 4.0 * f64::EPSILON,
            abs_tol: 1e-300,
            series_terms_max: 12,
            recurrence_shift_threshold: 8.0,
        }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::Config("tolerances must be strictly positive".into()));
        }
        if self.series_terms_max < 8 || 2 * self.series_terms_max > bernoulli::TABLE_MAX {
            return Err(Error::Config(format!(
                "series_terms_max must lie in [8, {}], got {}",
                bernoulli::TABLE_MAX / 2,
                self.series_terms_max
            )));
        }
        if !(self.recurrence_shift_threshold >= 1.0 && self.recurrence_shift_threshold.is_finite())
        {
            return Err(Error::Config(
                "recurrence_shift_threshold must be finite and >= 1".into(),
            ));
        }
        Ok(())
    }
}
