//! Grid scans: one row per field value, evaluated in parallel and emitted
//! in grid order.

use std::fmt::Write as _;
use std::io::{self, Write};

use qedvac::{FieldPoint, PhotonKinematics, Vacuum};
use rayon::prelude::*;

use crate::args::Format;
use crate::config::{GridSettings, Physics};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Column {
    B,
    NPar,
    NPerp,
    NPerpWeak,
    NPerpStrong,
    DeltaN,
    Faraday,
    MuExact,
    MuWeak,
    MuStrong,
    MuBohr,
    HReduced,
    VPerp,
    WeakValid,
    StrongValid,
    OneLoopValid,
    LowFrequency,
}

impl Column {
    pub const ALL: [Column; 17] = [
        Column::B,
        Column::NPar,
        Column::NPerp,
        Column::NPerpWeak,
        Column::NPerpStrong,
        Column::DeltaN,
        Column::Faraday,
        Column::MuExact,
        Column::MuWeak,
        Column::MuStrong,
        Column::MuBohr,
        Column::HReduced,
        Column::VPerp,
        Column::WeakValid,
        Column::StrongValid,
        Column::OneLoopValid,
        Column::LowFrequency,
    ];

    pub const DEFAULT: [Column; 13] = [
        Column::B,
        Column::NPar,
        Column::NPerp,
        Column::DeltaN,
        Column::Faraday,
        Column::MuExact,
        Column::MuWeak,
        Column::MuStrong,
        Column::HReduced,
        Column::VPerp,
        Column::WeakValid,
        Column::StrongValid,
        Column::OneLoopValid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Column::B => "b",
            Column::NPar => "n_par",
            Column::NPerp => "n_perp",
            Column::NPerpWeak => "n_perp_weak",
            Column::NPerpStrong => "n_perp_strong",
            Column::DeltaN => "delta_n",
            Column::Faraday => "faraday",
            Column::MuExact => "mu_exact",
            Column::MuWeak => "mu_weak",
            Column::MuStrong => "mu_strong",
            Column::MuBohr => "mu_bohr",
            Column::HReduced => "h_reduced",
            Column::VPerp => "v_perp",
            Column::WeakValid => "weak_valid",
            Column::StrongValid => "strong_valid",
            Column::OneLoopValid => "one_loop_valid",
            Column::LowFrequency => "low_frequency",
        }
    }

    fn unit(self) -> &'static str {
        match self {
            Column::B => "B/B_cr",
            Column::NPar | Column::NPerp | Column::NPerpWeak | Column::NPerpStrong => {
                "dimensionless"
            }
            Column::DeltaN => "n_perp - n_par, dimensionless",
            Column::Faraday => "radians",
            Column::MuExact | Column::MuWeak | Column::MuStrong => {
                "reduced moment, excludes (k/m) sin^2(theta)"
            }
            Column::MuBohr => "Bohr magnetons",
            Column::HReduced => "<H>/|k|",
            Column::VPerp => "units of c",
            Column::WeakValid => "b <= 0.44",
            Column::StrongValid => "b >= 0.5",
            Column::OneLoopValid => "b <= 30",
            Column::LowFrequency => "k/m < 1",
        }
    }

    pub fn parse_list(list: &str) -> Result<Vec<Column>, CliError> {
        let mut out = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let col = Column::ALL
                .into_iter()
                .find(|c| c.name() == name)
                .ok_or_else(|| CliError::Config(format!("unknown column '{name}'")))?;
            if !out.contains(&col) {
                out.push(col);
            }
        }
        if out.is_empty() {
            return Err(CliError::Config("no columns requested".into()));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRequest {
    pub b_min: f64,
    pub b_max: f64,
    pub points: usize,
    pub spacing: Spacing,
    pub columns: Vec<Column>,
    pub format: Format,
    pub physics: Physics,
}

impl ScanRequest {
    pub fn new(grid: GridSettings, physics: Physics) -> Result<Self, CliError> {
        let req = Self {
            b_min: grid.b_min,
            b_max: grid.b_max,
            points: grid.points,
            spacing: grid.spacing,
            columns: grid.columns,
            format: grid.format,
            physics,
        };
        req.validate()?;
        Ok(req)
    }

    /// The preset behind the `figure1` subcommand.
    pub fn figure1(physics: Physics, format: Format) -> Self {
        Self {
            b_min: 0.0,
            b_max: 30.0,
            points: 300,
            spacing: Spacing::Linear,
            columns: vec![Column::B, Column::HReduced],
            format,
            physics,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.b_min >= 0.0 && self.b_min < self.b_max && self.b_max.is_finite()) {
            return Err(CliError::Config(format!(
                "need 0 <= b-min < b-max, got [{}, {}]",
                self.b_min, self.b_max
            )));
        }
        if self.points < 2 {
            return Err(CliError::Config(format!(
                "need at least 2 points, got {}",
                self.points
            )));
        }
        if self.spacing == Spacing::Log && self.b_min <= 0.0 {
            return Err(CliError::Config("log spacing needs b-min > 0".into()));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let n = self.points - 1;
        (0..=n)
            .map(|i| {
                let t = i as f64 / n as f64;
                if i == n {
                    return self.b_max;
                }
                match self.spacing {
                    Spacing::Linear => self.b_min + (self.b_max - self.b_min) * t,
                    Spacing::Log => (self.b_min.ln() + (self.b_max / self.b_min).ln() * t).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Flag(bool),
    Missing,
}

/// One evaluated grid point. `errors` lists the columns that failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub cells: Vec<Cell>,
    pub errors: Vec<String>,
}

fn evaluate(
    vac: &Vacuum,
    col: Column,
    b: f64,
    kin: &PhotonKinematics,
    order: usize,
) -> qedvac::Result<Cell> {
    let fp = FieldPoint::new(b)?;
    let num = |v: f64| Ok(Cell::Num(v));
    match col {
        Column::B => num(b),
        Column::NPar => num(vac.n_parallel_exact(fp, kin)?.n),
        Column::NPerp => num(vac.n_perp_exact(fp, kin)?.n),
        Column::NPerpWeak => num(vac.n_perp_weak_series(fp, kin, order)?.n),
        Column::NPerpStrong => num(vac.n_perp_strong_series(fp, kin, order)?.n),
        Column::DeltaN => num(vac.delta_n(fp, kin)?.value),
        Column::Faraday => num(vac.faraday_rotation(fp, kin)?),
        Column::MuExact => num(vac.mu_exact(fp, kin)?.mu_reduced),
        Column::MuWeak => num(vac.mu_weak(fp, kin)?.mu_reduced),
        Column::MuStrong => num(vac.mu_strong(fp, kin)?.mu_reduced),
        Column::MuBohr => num(vac.mu_exact(fp, kin)?.mu_bohr),
        Column::HReduced => num(vac.hamiltonian_expectation(fp, kin)?.h_reduced),
        Column::VPerp => num(vac.v_perp(fp, kin)?),
        Column::WeakValid => Ok(Cell::Flag(b <= qedvac::moment::WEAK_MAX_B)),
        Column::StrongValid => Ok(Cell::Flag(b >= qedvac::moment::STRONG_MIN_B)),
        Column::OneLoopValid => Ok(Cell::Flag(b <= qedvac::moment::ONE_LOOP_MAX_B)),
        Column::LowFrequency => Ok(Cell::Flag(kin.is_low_frequency())),
    }
}

/// Evaluates every requested column at every grid point. A failing column
/// leaves a missing cell and a note in the row's status.
pub fn run(req: &ScanRequest) -> Result<Vec<Row>, CliError> {
    req.validate()?;
    let vac = req.physics.vacuum()?;
    let kin = req.physics.kinematics;
    let order = req.physics.series_order;
    Ok(req
        .grid()
        .par_iter()
        .map(|&b| {
            let mut errors = Vec::new();
            let cells = req
                .columns
                .iter()
                .map(|&col| {
                    evaluate(&vac, col, b, &kin, order).unwrap_or_else(|e| {
                        errors.push(format!("{}: {e}", col.name()));
                        Cell::Missing
                    })
                })
                .collect();
            Row { cells, errors }
        })
        .collect())
}

fn number(v: f64) -> Option<String> {
    v.is_finite().then(|| format!("{v:.16e}"))
}

fn status(row: &Row) -> String {
    if row.errors.is_empty() {
        "ok".to_string()
    } else {
        row.errors.join("; ")
    }
}

pub fn legend(columns: &[Column]) -> String {
    let mut s = String::from("# units:");
    for c in columns {
        let _ = write!(s, " {} [{}];", c.name(), c.unit());
    }
    s.push_str(" status [ok or failing columns]");
    s
}

pub fn write_csv(out: &mut impl Write, columns: &[Column], rows: &[Row]) -> io::Result<()> {
    let header: Vec<&str> = columns.iter().map(|c| c.name()).chain(["status"]).collect();
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        let mut fields: Vec<String> = row
            .cells
            .iter()
            .map(|c| match c {
                Cell::Num(v) => number(*v).unwrap_or_default(),
                Cell::Flag(f) => f.to_string(),
                Cell::Missing => String::new(),
            })
            .collect();
        let st = status(row);
        fields.push(if st.contains([',', '"']) {
            format!("\"{}\"", st.replace('"', "\"\""))
        } else {
            st
        });
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

pub fn write_json(out: &mut impl Write, columns: &[Column], rows: &[Row]) -> io::Result<()> {
    writeln!(out, "[")?;
    for (i, row) in rows.iter().enumerate() {
        let mut fields: Vec<String> = columns
            .iter()
            .zip(&row.cells)
            .map(|(col, cell)| {
                let v = match cell {
                    Cell::Num(v) => number(*v).unwrap_or_else(|| "null".into()),
                    Cell::Flag(f) => f.to_string(),
                    Cell::Missing => "null".into(),
                };
                format!("\"{}\": {v}", col.name())
            })
            .collect();
        let st = serde_json::to_string(&status(row)).map_err(io::Error::other)?;
        fields.push(format!("\"status\": {st}"));
        let sep = if i + 1 < rows.len() { "," } else { "" };
        writeln!(out, "  {{{}}}{sep}", fields.join(", "))?;
    }
    writeln!(out, "]")
}

/// Runs the scan and writes it to `out`; the units legend goes to `legend_out`.
pub fn emit(
    req: &ScanRequest,
    out: &mut impl Write,
    legend_out: &mut impl Write,
) -> Result<(), CliError> {
    let rows = run(req)?;
    writeln!(legend_out, "{}", legend(&req.columns))?;
    match req.format {
        Format::Csv => write_csv(out, &req.columns, &rows)?,
        Format::Json => write_json(out, &req.columns, &rows)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use qedvac::Constants;

    fn physics() -> Physics {
        Physics {
            alpha: Constants::default().alpha,
            kinematics: PhotonKinematics::default(),
            series_order: 8,
        }
    }

    fn request(b_min: f64, b_max: f64, points: usize, spacing: Spacing) -> ScanRequest {
        ScanRequest {
            b_min,
            b_max,
            points,
            spacing,
            columns: Column::DEFAULT.to_vec(),
            format: Format::Csv,
            physics: physics(),
        }
    }

    #[test]
    fn grids_hit_both_ends() {
        let g = request(0.1, 1.0, 2, Spacing::Linear).grid();
        assert_eq!(g, vec![0.1, 1.0]);
        let g = request(0.01, 30.0, 7, Spacing::Log).grid();
        assert_eq!(g.len(), 7);
        assert!((g[0] - 0.01).abs() < 1e-17);
        assert_eq!(g[6], 30.0);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn rejects_invalid_requests() {
        assert!(request(1.0, 1.0, 5, Spacing::Linear).validate().is_err());
        assert!(request(-1.0, 1.0, 5, Spacing::Linear).validate().is_err());
        assert!(request(0.0, 1.0, 1, Spacing::Linear).validate().is_err());
        assert!(request(0.0, 1.0, 5, Spacing::Log).validate().is_err());
    }

    #[test]
    fn zero_field_row_is_flagged_not_fatal() {
        let rows = run(&request(0.0, 1.0, 3, Spacing::Linear)).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].errors.iter().any(|e| e.starts_with("mu_strong")));
        assert!(rows[1].errors.is_empty());
    }

    #[test]
    fn csv_layout() {
        let req = request(0.1, 1.0, 2, Spacing::Linear);
        let mut buf = Vec::new();
        write_csv(&mut buf, &req.columns, &run(&req).unwrap()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("b,n_par,n_perp"));
        assert!(lines[1].starts_with("1.0000000000000001e-1,"));
    }

    #[test]
    fn column_list_parsing() {
        let cols = Column::parse_list("b, h_reduced,b").unwrap();
        assert_eq!(cols, vec![Column::B, Column::HReduced]);
        assert!(Column::parse_list("b,nonsense").is_err());
        assert!(Column::parse_list(" , ").is_err());
    }

    #[test]
    fn legend_names_every_column() {
        let l = legend(&Column::ALL);
        for c in Column::ALL {
            assert!(l.contains(c.name()));
        }
    }
}
