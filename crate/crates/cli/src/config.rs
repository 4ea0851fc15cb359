//! Settings resolution: command-line flags, then the config file, then
//! built-in defaults.

use std::collections::HashMap;
use std::f64::consts::FRAC_PI_2;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use qedvac::{Constants, PhotonKinematics, Vacuum};

use crate::args::{CommonArgs, Format, GridArgs, ToleranceArgs};
use crate::scan::{Column, Spacing};
use crate::validate::Tolerances;
use crate::CliError;

const KEYS: &[&str] = &[
    "alpha",
    "theta",
    "k_over_m",
    "length",
    "series_order",
    "b_min",
    "b_max",
    "points",
    "log",
    "columns",
    "format",
    "tol_three_route",
    "tol_weak_coefficient",
    "tol_moment_derivative",
    "tol_ratio",
    "tol_asymptote_gap",
    "tol_integrand",
    "tol_zeta_routes",
    "tol_zeta_identity",
    "tol_inversion",
    "tol_regime",
    "tol_specfun",
    "tol_figure1",
];

/// Parsed `key = value` lines. Blank lines and `#` comments are skipped.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    values: HashMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = HashMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", n + 1)))?;
            let key = key.trim().replace('-', "_");
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Config(format!(
                    "line {}: unknown key '{key}'",
                    n + 1
                )));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(Self { values })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Config(format!("{key}: cannot parse '{v}'"))),
        }
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

fn pick<T: FromStr>(
    flag: Option<T>,
    file: &ConfigFile,
    key: &str,
    default: T,
) -> Result<T, CliError> {
    match flag {
        Some(v) => Ok(v),
        None => Ok(file.get(key)?.unwrap_or(default)),
    }
}

/// Physics settings common to all subcommands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Physics {
    pub alpha: f64,
    pub kinematics: PhotonKinematics,
    pub series_order: usize,
}

impl Physics {
    pub fn vacuum(&self) -> Result<Vacuum, CliError> {
        Ok(Vacuum::with_alpha(self.alpha)?)
    }
}

/// Everything a subcommand needs after merging flags, file and defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub physics: Physics,
    pub file: ConfigFile,
}

impl Settings {
    pub fn resolve(common: &CommonArgs) -> Result<Self, CliError> {
        let file = match &common.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let kin_default = PhotonKinematics::default();
        let kinematics = PhotonKinematics {
            k_over_m: pick(common.k_over_m, &file, "k_over_m", kin_default.k_over_m)?,
            theta: pick(common.theta, &file, "theta", FRAC_PI_2)?,
            path_length: pick(common.length, &file, "length", kin_default.path_length)?,
        };
        kinematics.validate()?;
        let physics = Physics {
            alpha: pick(common.alpha, &file, "alpha", Constants::default().alpha)?,
            kinematics,
            series_order: pick(common.series_order, &file, "series_order", 8)?,
        };
        if physics.series_order == 0 {
            return Err(CliError::Config("series order must be at least 1".into()));
        }
        physics.vacuum()?;
        Ok(Self { physics, file })
    }

    pub fn grid(&self, grid: &GridArgs) -> Result<GridSettings, CliError> {
        let f = &self.file;
        let log = grid.log || f.get::<bool>("log")?.unwrap_or(false);
        let columns = match grid.columns.as_deref().or_else(|| f.raw("columns")) {
            Some(list) => Column::parse_list(list)?,
            None => Column::DEFAULT.to_vec(),
        };
        let format = match grid.format {
            Some(v) => v,
            None => match f.raw("format") {
                None => Format::Csv,
                Some("csv") => Format::Csv,
                Some("json") => Format::Json,
                Some(other) => return Err(CliError::Config(format!("format: unknown '{other}'"))),
            },
        };
        Ok(GridSettings {
            b_min: pick(grid.b_min, f, "b_min", 0.01)?,
            b_max: pick(grid.b_max, f, "b_max", 30.0)?,
            points: pick(grid.points, f, "points", 100)?,
            spacing: if log { Spacing::Log } else { Spacing::Linear },
            columns,
            format,
        })
    }

    pub fn tolerances(&self, t: &ToleranceArgs) -> Result<Tolerances, CliError> {
        let f = &self.file;
        let d = Tolerances::default();
        let tol = Tolerances {
            three_route: pick(t.three_route, f, "tol_three_route", d.three_route)?,
            weak_coefficient: pick(
                t.weak_coefficient,
                f,
                "tol_weak_coefficient",
                d.weak_coefficient,
            )?,
            moment_derivative: pick(
                t.moment_derivative,
                f,
                "tol_moment_derivative",
                d.moment_derivative,
            )?,
            ratio: pick(t.ratio, f, "tol_ratio", d.ratio)?,
            asymptote_gap: pick(t.asymptote_gap, f, "tol_asymptote_gap", d.asymptote_gap)?,
            integrand: pick(t.integrand, f, "tol_integrand", d.integrand)?,
            zeta_routes: pick(t.zeta_routes, f, "tol_zeta_routes", d.zeta_routes)?,
            zeta_identity: pick(t.zeta_identity, f, "tol_zeta_identity", d.zeta_identity)?,
            inversion: pick(t.inversion, f, "tol_inversion", d.inversion)?,
            regime: pick(t.regime, f, "tol_regime", d.regime)?,
            specfun: pick(t.specfun, f, "tol_specfun", d.specfun)?,
            figure1: pick(t.figure1, f, "tol_figure1", d.figure1)?,
        };
        tol.validate()?;
        Ok(tol)
    }
}

/// Grid and output settings for `scan`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSettings {
    pub b_min: f64,
    pub b_max: f64,
    pub points: usize,
    pub spacing: Spacing,
    pub columns: Vec<Column>,
    pub format: Format,
}
