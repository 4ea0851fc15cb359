use std::f64::consts::FRAC_PI_2;
use std::process::{Command, Output};

use qedvac::{FieldPoint, PhotonKinematics, Vacuum};
use serde_json::Value;

fn qedvac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qedvac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn two_point_scan_has_header_and_two_rows() {
    let o = qedvac(&["scan", "--b-min", "0.1", "--b-max", "1", "--points", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("b,"));
    assert!(lines[1].starts_with("1.0000000000000001e-1,"));
    assert!(lines[2].starts_with("1.0000000000000000e0,"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("# units:"));
}

#[test]
fn csv_and_json_carry_identical_numbers() {
    let base = [
        "scan", "--b-min", "0.01", "--b-max", "30", "--points", "9", "--log",
    ];
    let csv = stdout(&qedvac(&base));
    let json: Value = serde_json::from_str(&stdout(&qedvac(
        &[&base[..], &["--format", "json"]].concat(),
    )))
    .unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for (line, obj) in lines.zip(rows) {
        for (name, field) in header.iter().zip(line.split(',')) {
            let v = &obj[*name];
            if let Ok(x) = field.parse::<f64>() {
                assert_eq!(v.as_f64().unwrap().to_bits(), x.to_bits(), "{name}");
            } else {
                assert_eq!(v.to_string().trim_matches('"'), field, "{name}");
            }
        }
    }
}

#[test]
fn scans_are_reproducible() {
    let args = ["scan", "--points", "40", "--b-min", "0", "--b-max", "5"];
    assert_eq!(qedvac(&args).stdout, qedvac(&args).stdout);
}

#[test]
fn failing_points_are_flagged_not_fatal() {
    let o = qedvac(&[
        "scan",
        "--b-min",
        "0",
        "--b-max",
        "1",
        "--points",
        "2",
        "--columns",
        "b,mu_strong",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("0.0000000000000000e0,,"));
    assert!(row.contains("mu_strong"));
}

#[test]
fn invalid_scan_requests_exit_2() {
    assert_eq!(
        qedvac(&["scan", "--b-min", "2", "--b-max", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qedvac(&["scan", "--points", "1"]).status.code(), Some(2));
    assert_eq!(
        qedvac(&["scan", "--b-min", "0", "--log"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qedvac(&["scan", "--columns", "bogus"]).status.code(),
        Some(2)
    );
}

#[test]
fn figure1_preset_is_falling_and_concave() {
    let o = qedvac(&["figure1"]);
    assert_eq!(o.status.code(), Some(0));
    let h: Vec<f64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(h.len(), 300);
    assert_eq!(h[0], 1.0);
    assert!(h.windows(2).all(|w| w[1] <= w[0]));
    assert!(h.windows(3).all(|w| w[2] - 2.0 * w[1] + w[0] <= 1e-12));
}

#[test]
fn validate_passes_and_reports_json() {
    let o = qedvac(&["validate", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = report["entries"].as_array().unwrap();
    for n in 1..=12 {
        let id = format!("C{n}");
        assert_eq!(
            entries.iter().filter(|e| e["id"] == id.as_str()).count(),
            1,
            "{id}"
        );
    }
    let ratio = entries.iter().find(|e| e["id"] == "C4").unwrap();
    assert!(ratio["detail"].as_str().unwrap().contains("2.5487"));
}

#[test]
fn tight_three_route_tolerance_fails() {
    let o = qedvac(&["validate", "--tol-three-route", "1e-16"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] C1"));
}

#[test]
fn config_file_is_read_and_flags_win() {
    let dir = std::env::temp_dir().join(format!("qedvac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(
        &path,
        "# test\npoints = 3\nb_min = 1\nb_max = 2\ncolumns = b\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let rows = stdout(&qedvac(&["scan", "--config", p]));
    assert_eq!(rows.lines().count(), 4);
    let rows = stdout(&qedvac(&["scan", "--config", p, "--points", "2"]));
    assert_eq!(rows.lines().count(), 3);
    std::fs::write(&path, "nonsense = 1\n").unwrap();
    assert_eq!(qedvac(&["scan", "--config", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invert_round_trip_at_b5() {
    let vac = Vacuum::default();
    let kin = PhotonKinematics::new(0.1, FRAC_PI_2, 1.0).unwrap();
    let mu = vac
        .mu_strong(FieldPoint::new(5.0).unwrap(), &kin)
        .unwrap()
        .mu_bohr;
    let o = qedvac(&[
        "invert",
        "--mu-bohr",
        &format!("{mu:.17e}"),
        "--branch",
        "-1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let b: f64 = text
        .split("b = ")
        .nth(1)
        .and_then(|s| s.split(',').next())
        .unwrap()
        .parse()
        .unwrap();
    assert!((b - 5.0).abs() < 1e-9, "{text}");
    assert!(text.contains("residual"));
}

#[test]
fn invert_at_asymptote_reports_missing_branch() {
    let vac = Vacuum::default();
    let mu = 2.0 * 0.1 * vac.alpha_over_4pi() * 2.0 / 3.0;
    let o = qedvac(&[
        "invert",
        "--mu-bohr",
        &format!("{mu:.17e}"),
        "--branch",
        "-1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("no finite solution on branch -1"), "{err}");
    assert!(err.contains("branch 0: b = "));
}

#[test]
fn malformed_numbers_exit_2_with_usage() {
    let o = qedvac(&["invert", "--mu-bohr", "abc"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(
        qedvac(&["invert", "--mu-bohr", "1e-4", "--branch", "3"])
            .status
            .code(),
        Some(2)
    );
}
