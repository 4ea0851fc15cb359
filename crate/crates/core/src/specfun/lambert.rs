//! Real branches of the Lambert W function, W(z)·e^{W(z)} = z.

use std::f64::consts::E;

use super::PrecisionConfig;
use crate::error::{domain, Error, Result};

const MAX_ITER: usize = 64;

/// −1/e, the common endpoint of both real branches.
pub const BRANCH_POINT: f64 = -1.0 / E;

/// The two real branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LambertBranch {
    /// W₀: z ≥ −1/e, W ≥ −1.
    Principal,
    /// W₋₁: −1/e ≤ z < 0, W ≤ −1.
    Lower,
}

impl LambertBranch {
    pub fn index(self) -> i32 {
        match self {
            Self::Principal => 0,
            Self::Lower => -1,
        }
    }
}

impl TryFrom<i32> for LambertBranch {
    type Error = Error;

    fn try_from(k: i32) -> Result<Self> {
        match k {
            0 => Ok(Self::Principal),
            -1 => Ok(Self::Lower),
            _ => Err(domain("lambert_w", k as f64, "branch 0 or -1")),
        }
    }
}

/// Lambert W on real branch `0` or `-1` with default tolerances.
pub fn lambert_w(branch: i32, z: f64) -> Result<f64> {
    lambert_w_with(
        LambertBranch::try_from(branch)?,
        z,
        &PrecisionConfig::default(),
    )
}

/// Lambert W by Halley iteration from a branch-point or asymptotic guess.
pub fn lambert_w_with(branch: LambertBranch, z: f64, cfg: &PrecisionConfig) -> Result<f64> {
    if z.is_nan() {
        return Err(domain("lambert_w", z, "finite z"));
    }
    // e·z + 1 measures the distance to the branch point; tolerate rounding
    // of z = −1/e itself.
    let ez1 = E.mul_add(z, 1.0);
    if ez1 < -4.0 * f64::EPSILON {
        return Err(domain("lambert_w", z, "z >= -1/e"));
    }
    if ez1 <= 4.0 * f64::EPSILON {
        return Ok(-1.0);
    }
    let mut w = match branch {
        LambertBranch::Principal => {
            if z == 0.0 {
                return Ok(0.0);
            }
            if z.is_infinite() {
                return Ok(f64::INFINITY);
            }
            if z < -0.25 {
                branch_point_series((2.0 * ez1).sqrt())
            } else {
                // Winitzki's global approximation.
                let l = z.ln_1p();
                l * (1.0 - (1.0 + l).ln() / (2.0 + l))
            }
        }
        LambertBranch::Lower => {
            if z >= 0.0 {
                return Err(domain("lambert_w", z, "-1/e <= z < 0 on branch -1"));
            }
            if z < -0.25 {
                branch_point_series(-(2.0 * ez1).sqrt())
            } else {
                let l1 = (-z).ln();
                let l2 = (-l1).ln();
                l1 - l2 + l2 / l1
            }
        }
    };
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - z;
        let wp1 = w + 1.0;
        // Near the branch point the step stalls at rounding level before
        // meeting the relative tolerance; the residual is then as small as
        // it can get.
        if wp1 == 0.0 || f.abs() <= 4.0 * f64::EPSILON * z.abs() {
            return Ok(w);
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        w -= step;
        if !w.is_finite() {
            break;
        }
        if step.abs() <= cfg.rel_tol * w.abs() + cfg.abs_tol {
            return Ok(w);
        }
    }
    Err(Error::Iteration {
        func: "lambert_w",
        arg: z,
    })
}

/// Series about the branch point in p = ±√(2(ez+1)).
fn branch_point_series(p: f64) -> f64 {
    -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(w: f64, z: f64) -> f64 {
        (w * w.exp() - z).abs() / z.abs().max(1.0)
    }

    #[test]
    fn trivial_values() {
        assert_eq!(lambert_w(0, 0.0).unwrap(), 0.0);
        assert!((lambert_w(0, E).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(lambert_w(0, BRANCH_POINT).unwrap(), -1.0);
        assert_eq!(lambert_w(-1, BRANCH_POINT).unwrap(), -1.0);
        // Omega constant
        let omega = lambert_w(0, 1.0).unwrap();
        assert!((omega - 0.567_143_290_409_783_8).abs() < 1e-15);
    }

    #[test]
    fn branch_domains() {
        assert!(lambert_w(0, -0.5).is_err());
        assert!(lambert_w(-1, 0.0).is_err());
        assert!(lambert_w(-1, 1.0).is_err());
        assert!(lambert_w(1, 0.5).is_err());
        assert_eq!(LambertBranch::try_from(-1).unwrap(), LambertBranch::Lower);
    }

    #[test]
    fn lower_branch_values() {
        // W₋₁(−ln2/2) = −2ln2 since (−2ln2)e^{−2ln2} = −ln2/2
        let z = -std::f64::consts::LN_2 / 2.0;
        let w = lambert_w(-1, z).unwrap();
        assert!((w + 2.0 * std::f64::consts::LN_2).abs() < 1e-14);
        let w = lambert_w(-1, -1e-300).unwrap();
        assert!(w < -680.0 && residual(w, -1e-300) < 1e-13);
    }

    #[test]
    fn converges_just_above_branch_point() {
        for k in 1..200 {
            let z = BRANCH_POINT + 1e-5 * k as f64;
            for branch in [0, -1] {
                let w = lambert_w(branch, z).unwrap();
                assert!(residual(w, z) <= 1e-13, "branch {branch} z={z}");
            }
        }
    }

    #[test]
    fn residuals_across_domain() {
        let mut z = BRANCH_POINT;
        while z < 1e6 {
            for branch in [LambertBranch::Principal, LambertBranch::Lower] {
                if branch == LambertBranch::Lower && z >= 0.0 {
                    continue;
                }
                let w = lambert_w(branch.index(), z).unwrap();
                assert!(residual(w, z) <= 1e-13, "{branch:?} z={z} w={w}");
                match branch {
                    LambertBranch::Principal => assert!(w >= -1.0),
                    LambertBranch::Lower => assert!(w <= -1.0),
                }
            }
            z = if z < 0.0 {
                z * 0.9 + 1e-4
            } else {
                z * 1.7 + 1e-3
            };
        }
    }
}
