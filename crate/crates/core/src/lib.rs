//! One-loop QED observables of the magnetized vacuum.
//!
//! The crate evaluates the Heisenberg–Euler effective Lagrangian derivatives
//! at a pure magnetic field point, the vacuum refractive indices of both
//! photon polarization modes, Faraday rotation, the perpendicular-mode group
//! velocity and the photon anomalous magnetic moment. Every central quantity
//! is available through independent routes (closed forms in special
//! functions, weak/strong field series, and a proper-time quadrature) so that
//! they can be checked against one another.
//!
//! Units: the field enters as `b = B / B_cr`, energies per photon are in
//! units of `|k|`, and `ħ = c = m = 1`.
//!
//! ```
//! use qedvac::{FieldPoint, Vacuum};
//!
//! let vac = Vacuum::default();
//! let fp = FieldPoint::new(1.0).unwrap();
//! let closed = vac.b2_gamma_gg_closed(fp).unwrap();
//! let oracle = vac.b2_gamma_gg_quadrature(fp, &Default::default()).unwrap();
//! assert!((closed - oracle).abs() < 1e-10 * closed);
//! ```

pub mod error;
pub mod lagrangian;
pub mod moment;
pub mod optics;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
pub use lagrangian::{FieldPoint, KappaCoefficients, LagrangianWeights, Route};
pub use moment::{HamiltonianPoint, MomentMethod, MomentResult};
pub use optics::{Mode, PhotonKinematics, RefractionMethod, RefractionResult};
pub use quadrature::QuadratureConfig;
pub use specfun::{Constants, PrecisionConfig};

/// Evaluation context: physical constants plus special-function precision
/// settings. All observables are methods on this type.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vacuum {
    pub constants: Constants,
    pub precision: PrecisionConfig,
}

impl Vacuum {
    pub fn new(constants: Constants, precision: PrecisionConfig) -> Result<Self> {
        constants.validate()?;
        precision.validate()?;
        Ok(Self {
            constants,
            precision,
        })
    }

    /// Context with a non-default fine-structure constant.
    pub fn with_alpha(alpha: f64) -> Result<Self> {
        Self::new(
            Constants {
                alpha,
                ..Constants::default()
            },
            PrecisionConfig::default(),
        )
    }

    /// The ubiquitous prefactor α/(4π).
    pub fn alpha_over_4pi(&self) -> f64 {
        self.constants.alpha / (4.0 * std::f64::consts::PI)
    }
}
