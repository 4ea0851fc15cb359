//! Field recovery from a measured photon moment.

use std::io::Write;

use qedvac::moment::{c1, STRONG_MIN_B};
use qedvac::{FieldPoint, PhotonKinematics, Vacuum};

use crate::CliError;

/// One branch's answer: the field and the relative round-trip residual of
/// the moment, or the reason there is none.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchSolution {
    pub branch: i32,
    pub outcome: Result<(f64, f64), String>,
}

pub fn solve(
    vac: &Vacuum,
    mu_bohr: f64,
    kin: &PhotonKinematics,
    branch: i32,
) -> Result<BranchSolution, CliError> {
    if branch != 0 && branch != -1 {
        return Err(CliError::Config(format!(
            "branch must be 0 or -1, got {branch}"
        )));
    }
    let outcome = vac
        .invert_b_from_mu_bohr(mu_bohr, kin, branch)
        .and_then(|fp| {
            let back = vac.mu_strong(FieldPoint::new(fp.b())?, kin)?.mu_bohr;
            Ok((fp.b(), ((back - mu_bohr) / mu_bohr).abs()))
        })
        .map_err(|e| e.to_string());
    Ok(BranchSolution { branch, outcome })
}

/// Prints the requested solution(s). Returns false when no requested
/// branch has a finite solution, after printing both-branch diagnostics.
pub fn report(
    vac: &Vacuum,
    mu_bohr: f64,
    kin: &PhotonKinematics,
    branch: Option<i32>,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<bool, CliError> {
    let both = [solve(vac, mu_bohr, kin, 0)?, solve(vac, mu_bohr, kin, -1)?];
    let wanted: Vec<&BranchSolution> = match branch {
        Some(k) => {
            solve(vac, mu_bohr, kin, k)?;
            both.iter().filter(|s| s.branch == k).collect()
        }
        None => both.iter().collect(),
    };
    let mut found = false;
    for s in &wanted {
        if let Ok((b, residual)) = s.outcome {
            found = true;
            writeln!(
                out,
                "branch {}: b = {b:.16e}, residual = {residual:.3e}",
                s.branch
            )?;
            if b < STRONG_MIN_B {
                writeln!(
                    err,
                    "warning: b = {b:.4} lies below the strong-field window b >= {STRONG_MIN_B}"
                )?;
            }
        }
    }
    if !found {
        let scale = 2.0 * kin.k_over_m * kin.sin2();
        let b_star = (c1() + 0.5).exp();
        let floor = vac.mu_strong(FieldPoint::new(b_star)?, kin)?.mu_bohr;
        let ceiling = scale * vac.alpha_over_4pi() * 2.0 / 3.0;
        writeln!(
            err,
            "the strong-field moment has its minimum {floor:.6e} at b* = {b_star:.6}; \
             branch 0 covers mu >= {floor:.6e} with b <= b*, branch -1 covers {floor:.6e} <= mu < {ceiling:.6e} with b >= b*"
        )?;
        for s in &both {
            match &s.outcome {
                Ok((b, _)) => writeln!(err, "branch {}: b = {b:.16e}", s.branch)?,
                Err(e) => writeln!(err, "no finite solution on branch {}: {e}", s.branch)?,
            }
        }
    }
    Ok(found)
}
