use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qedvac", version, about = "Magnetized-vacuum QED observables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate observables on a grid of field strengths.
    Scan(ScanArgs),
    /// Run the acceptance checks and report pass/fail.
    Validate(ValidateArgs),
    /// Recover the field from a photon moment given in Bohr magnetons.
    Invert(InvertArgs),
    /// Emit the reduced Hamiltonian curve on b in [0, 30].
    Figure1(Figure1Args),
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Fine-structure constant.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Angle between B and k, in radians.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Photon momentum |k|/m.
    #[arg(long = "k-over-m")]
    pub k_over_m: Option<f64>,
    /// Path length in units of 1/m.
    #[arg(long)]
    pub length: Option<f64>,
    /// Number of terms in the refractive-index series.
    #[arg(long = "series-order")]
    pub series_order: Option<usize>,
    /// Flat key=value configuration file; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GridArgs {
    /// Lowest field, in units of the critical field.
    #[arg(long = "b-min")]
    pub b_min: Option<f64>,
    /// Highest field, in units of the critical field.
    #[arg(long = "b-max")]
    pub b_max: Option<f64>,
    /// Number of grid points, at least 2.
    #[arg(long)]
    pub points: Option<usize>,
    /// Logarithmic spacing (requires b-min > 0).
    #[arg(long)]
    pub log: bool,
    /// Comma-separated output columns.
    #[arg(long)]
    pub columns: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Clone, Args)]
pub struct Figure1Args {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ToleranceArgs {
    #[arg(long = "tol-three-route")]
    pub three_route: Option<f64>,
    #[arg(long = "tol-weak-coefficient")]
    pub weak_coefficient: Option<f64>,
    #[arg(long = "tol-moment-derivative")]
    pub moment_derivative: Option<f64>,
    #[arg(long = "tol-ratio")]
    pub ratio: Option<f64>,
    #[arg(long = "tol-asymptote-gap")]
    pub asymptote_gap: Option<f64>,
    #[arg(long = "tol-integrand")]
    pub integrand: Option<f64>,
    #[arg(long = "tol-zeta-routes")]
    pub zeta_routes: Option<f64>,
    #[arg(long = "tol-zeta-identity")]
    pub zeta_identity: Option<f64>,
    #[arg(long = "tol-inversion")]
    pub inversion: Option<f64>,
    #[arg(long = "tol-regime")]
    pub regime: Option<f64>,
    #[arg(long = "tol-specfun")]
    pub specfun: Option<f64>,
    #[arg(long = "tol-figure1")]
    pub figure1: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
    /// Emit the report as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct InvertArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Photon moment in Bohr magnetons.
    #[arg(long = "mu-bohr", allow_negative_numbers = true)]
    pub mu_bohr: f64,
    /// Lambert-W branch, 0 or -1. Both are tried when omitted.
    #[arg(long, allow_negative_numbers = true)]
    pub branch: Option<i32>,
}
