//! Command-line front end for the `qedvac` evaluator: grid scans, the
//! acceptance suite, moment inversion and the reduced-Hamiltonian preset.

pub mod args;
pub mod config;
pub mod invert;
pub mod scan;
pub mod validate;

use std::io::{self, Write};

use thiserror::Error;

use args::{Cli, Command, Format};
use config::Settings;
use scan::ScanRequest;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid request: {0}")]
    Config(String),
    #[error(transparent)]
    Eval(#[from] qedvac::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Exit status: 0 success, 1 a check failed or no solution, 2 bad input or
/// internal error.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr().lock();
    match cli.command {
        Command::Scan(a) => {
            let settings = Settings::resolve(&a.common)?;
            let req = ScanRequest::new(settings.grid(&a.grid)?, settings.physics)?;
            scan::emit(&req, &mut out, &mut err)?;
            Ok(0)
        }
        Command::Figure1(a) => {
            let settings = Settings::resolve(&a.common)?;
            let req = ScanRequest::figure1(settings.physics, a.format.unwrap_or(Format::Csv));
            scan::emit(&req, &mut out, &mut err)?;
            Ok(0)
        }
        Command::Validate(a) => {
            let settings = Settings::resolve(&a.common)?;
            let tol = settings.tolerances(&a.tolerances)?;
            let report = validate::run_suite(&settings.physics, &tol)?;
            let text = if a.json {
                report.to_json()?
            } else {
                report.to_text()
            };
            writeln!(out, "{text}")?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Invert(a) => {
            let settings = Settings::resolve(&a.common)?;
            let vac = settings.physics.vacuum()?;
            let found = invert::report(
                &vac,
                a.mu_bohr,
                &settings.physics.kinematics,
                a.branch,
                &mut out,
                &mut err,
            )?;
            Ok(if found { 0 } else { 1 })
        }
    }
}
