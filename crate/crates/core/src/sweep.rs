//! Plot data: arc length against launch angle, sampled trajectories, the
//! optimum report, and their CSV encodings.
//!
//! CSV files have a one-line header, `.` as decimal separator and `\n` line
//! endings. Floats are written with 17 significant digits so that parsing
//! them back gives the same bits.

use std::f64::consts::FRAC_PI_2;
use std::io::{Read, Write};

use thiserror::Error;

use crate::error::{Error, Result};
use crate::quadrature::{arc_length_quadrature, QuadratureConfig};
use crate::solver::{coth_fixed_point, optimal_angle, RootConfig};
use crate::trajectory::{
    arc_length_closed_form, arc_length_derivative_closed_form, flight_time, position, Angle, ProjectileParams,
};

/// Launch angles, in degrees, of the default trajectory family: the range
/// optimum at 45°, the arc-length optimum near 56.47°, and three others for
/// contrast.
pub const FAMILY_DEGREES: [f64; 5] = [30.0, 45.0, 56.47, 75.0, 90.0];

/// Uniform grid of launch angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    theta_min: f64,
    theta_max: f64,
    steps: usize,
}

impl SweepSpec {
    pub fn new(theta_min: f64, theta_max: f64, steps: usize) -> Result<Self> {
        if !(theta_min > 0.0 && theta_min < theta_max && theta_max <= FRAC_PI_2) {
            return Err(Error::domain(format!("sweep needs 0 < min < max ≤ π/2, got [{theta_min}, {theta_max}]")));
        }
        if steps < 2 {
            return Err(Error::domain(format!("sweep needs at least 2 steps, got {steps}")));
        }
        Ok(Self { theta_min, theta_max, steps })
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn spacing(&self) -> f64 {
        (self.theta_max - self.theta_min) / (self.steps - 1) as f64
    }

    /// The grid angles; the last one is exactly `theta_max`.
    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (0..self.steps).map(move |i| if i + 1 == self.steps { self.theta_max } else { self.theta_min + i as f64 * h })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub arc_length: f64,
    /// `None` for a vertical launch, where `L'` is undefined.
    pub arc_length_derivative: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub theta: f64,
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

/// One sweep row: closed forms below `π/2`, quadrature and a blank
/// derivative at `π/2`.
pub fn sweep_row(theta: f64, params: ProjectileParams) -> Result<SweepRow> {
    row_at(theta, params, &QuadratureConfig::default())
}

fn row_at(theta: f64, params: ProjectileParams, quad: &QuadratureConfig) -> Result<SweepRow> {
    let angle = Angle::new(theta)?;
    if angle.is_vertical() {
        let arc_length = arc_length_quadrature(angle, params, quad)?;
        return Ok(SweepRow { theta, arc_length, arc_length_derivative: None });
    }
    Ok(SweepRow {
        theta,
        arc_length: arc_length_closed_form(angle, params)?,
        arc_length_derivative: Some(arc_length_derivative_closed_form(angle, params)?),
    })
}

/// Arc length and its derivative on a uniform angle grid.
///
/// Uses the closed forms, falling back to quadrature for `θ = π/2`. The first
/// failing angle aborts the sweep and is reported in the error.
pub fn sweep(spec: &SweepSpec, params: ProjectileParams) -> Result<Vec<SweepRow>> {
    let quad = QuadratureConfig::default();
    spec.angles()
        .map(|theta| row_at(theta, params, &quad).map_err(|e| Error::AtAngle { theta, source: Box::new(e) }))
        .collect()
}

/// `n` positions at uniform times from launch to landing.
pub fn trajectory_samples(theta: Angle, params: ProjectileParams, n: usize) -> Result<Vec<TrajectorySample>> {
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 samples, got {n}")));
    }
    let tau = flight_time(theta, params);
    let last = (n - 1) as f64;
    (0..n)
        .map(|i| {
            let t = if i == n - 1 { tau } else { tau * i as f64 / last };
            let (x, y) = position(t, theta, params)?;
            Ok(TrajectorySample { theta: theta.radians(), t, x, y })
        })
        .collect()
}

/// Concatenated samples for several launch angles, in the given order.
pub fn trajectory_family(thetas: &[Angle], params: ProjectileParams, n: usize) -> Result<Vec<TrajectorySample>> {
    let mut out = Vec::with_capacity(thetas.len() * n);
    for &theta in thetas {
        out.extend(trajectory_samples(theta, params, n)?);
    }
    Ok(out)
}

/// Sum of segment lengths between consecutive samples. Approaches the arc
/// length from below as the sampling is refined.
pub fn polyline_length(samples: &[TrajectorySample]) -> f64 {
    samples.windows(2).map(|w| (w[1].x - w[0].x).hypot(w[1].y - w[0].y)).sum()
}

/// The optimal angle and the lengths that compare it with 45°, in natural
/// units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimumReport {
    /// Positive fixed point of `coth`.
    pub alpha: f64,
    pub theta_rad: f64,
    pub theta_deg: f64,
    pub max_length: f64,
    pub quarter_turn_length: f64,
    /// `100·(L(θ*) − L(π/4))/L(π/4)`.
    pub gap_percent: f64,
    pub iterations: usize,
}

pub fn report_optimum() -> Result<OptimumReport> {
    let cfg = RootConfig::coth_default();
    let alpha = coth_fixed_point(&cfg)?;
    let theta = optimal_angle(&cfg)?.root;
    let nat = ProjectileParams::natural();
    let max_length = arc_length_closed_form(Angle::new(theta)?, nat)?;
    let quarter_turn_length = arc_length_closed_form(Angle::new(std::f64::consts::FRAC_PI_4)?, nat)?;
    Ok(OptimumReport {
        alpha: alpha.root,
        theta_rad: theta,
        theta_deg: theta.to_degrees(),
        max_length,
        quarter_turn_length,
        gap_percent: 100.0 * (max_length - quarter_turn_length) / quarter_turn_length,
        iterations: alpha.iterations,
    })
}

#[derive(Debug, Error)]
pub enum CsvError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("unexpected header {found:?}, expected {expected:?}")]
    Header { found: Vec<String>, expected: Vec<&'static str> },
    #[error("record {record}: cannot parse {field:?} as a number")]
    Parse { record: usize, field: String },
}

/// How angles are written to CSV.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AngleUnit {
    #[default]
    Radians,
    Degrees,
}

impl AngleUnit {
    fn convert(self, theta: f64) -> f64 {
        match self {
            AngleUnit::Radians => theta,
            AngleUnit::Degrees => theta.to_degrees(),
        }
    }
}

pub const SWEEP_HEADER: [&str; 3] = ["theta", "arc_length", "arc_length_derivative"];
pub const TRAJECTORY_HEADER: [&str; 4] = ["theta", "t", "x", "y"];
pub const REPORT_HEADER: [&str; 2] = ["quantity", "value"];

/// 17 significant digits.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w)
}

pub fn write_sweep_csv<W: Write>(w: W, rows: &[SweepRow], unit: AngleUnit) -> Result<(), CsvError> {
    let mut out = writer(w);
    out.write_record(SWEEP_HEADER)?;
    for row in rows {
        let d = row.arc_length_derivative.map(format_f64).unwrap_or_default();
        out.write_record([format_f64(unit.convert(row.theta)), format_f64(row.arc_length), d])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_trajectory_csv<W: Write>(w: W, samples: &[TrajectorySample], unit: AngleUnit) -> Result<(), CsvError> {
    let mut out = writer(w);
    out.write_record(TRAJECTORY_HEADER)?;
    for s in samples {
        out.write_record([format_f64(unit.convert(s.theta)), format_f64(s.t), format_f64(s.x), format_f64(s.y)])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_report_csv<W: Write>(w: W, report: &OptimumReport) -> Result<(), CsvError> {
    let mut out = writer(w);
    out.write_record(REPORT_HEADER)?;
    let rows = [
        ("alpha", format_f64(report.alpha)),
        ("theta_rad", format_f64(report.theta_rad)),
        ("theta_deg", format_f64(report.theta_deg)),
        ("max_length", format_f64(report.max_length)),
        ("quarter_turn_length", format_f64(report.quarter_turn_length)),
        ("gap_percent", format_f64(report.gap_percent)),
        ("iterations", report.iterations.to_string()),
    ];
    for (k, v) in rows {
        out.write_record([k, v.as_str()])?;
    }
    out.flush()?;
    Ok(())
}

fn read_records<R: Read>(r: R, expected: &[&'static str]) -> Result<Vec<csv::StringRecord>, CsvError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(r);
    let header = rdr.headers()?;
    if header.iter().ne(expected.iter().copied()) {
        return Err(CsvError::Header {
            found: header.iter().map(str::to_owned).collect(),
            expected: expected.to_vec(),
        });
    }
    rdr.records().map(|r| r.map_err(CsvError::from)).collect()
}

fn parse_field(record: usize, field: &str) -> Result<f64, CsvError> {
    field.parse().map_err(|_| CsvError::Parse { record, field: field.to_owned() })
}

/// Parses a sweep file. Angles come back in whatever unit they were written.
pub fn read_sweep_csv<R: Read>(r: R) -> Result<Vec<SweepRow>, CsvError> {
    read_records(r, &SWEEP_HEADER)?
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            let d = &rec[2];
            Ok(SweepRow {
                theta: parse_field(i, &rec[0])?,
                arc_length: parse_field(i, &rec[1])?,
                arc_length_derivative: if d.is_empty() { None } else { Some(parse_field(i, d)?) },
            })
        })
        .collect()
}

pub fn read_trajectory_csv<R: Read>(r: R) -> Result<Vec<TrajectorySample>, CsvError> {
    read_records(r, &TRAJECTORY_HEADER)?
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            Ok(TrajectorySample {
                theta: parse_field(i, &rec[0])?,
                t: parse_field(i, &rec[1])?,
                x: parse_field(i, &rec[2])?,
                y: parse_field(i, &rec[3])?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn spec_validation() {
        assert!(SweepSpec::new(0.0, 1.0, 3).is_err());
        assert!(SweepSpec::new(1.0, 0.5, 3).is_err());
        assert!(SweepSpec::new(0.1, 1.6, 3).is_err());
        assert!(SweepSpec::new(0.1, 1.0, 1).is_err());
        let s = SweepSpec::new(0.1, FRAC_PI_2, 7).unwrap();
        let a: Vec<f64> = s.angles().collect();
        assert_eq!(a.len(), 7);
        assert_eq!(a[0], 0.1);
        assert_eq!(a[6], FRAC_PI_2);
    }

    #[test]
    fn three_point_sweep() {
        let spec = SweepSpec::new(FRAC_PI_4, FRAC_PI_2, 3).unwrap();
        let rows = sweep(&spec, ProjectileParams::natural()).unwrap();
        assert_eq!(rows.len(), 3);
        assert!((rows[0].arc_length - 1.147_793_57).abs() < 1e-8);
        // L(3π/8) from mpmath quadrature
        assert!((rows[1].arc_length - 1.160_374_831_746_558_3).abs() < 1e-12);
        assert!((rows[2].arc_length - 1.0).abs() < 1e-10);
        assert!(rows[2].arc_length_derivative.is_none());
        assert!(rows[..2].iter().all(|r| r.arc_length_derivative.is_some()));
    }

    #[test]
    fn sweep_argmax_near_optimum() {
        let spec = SweepSpec::new(0.01, 1.56, 1000).unwrap();
        let rows = sweep(&spec, ProjectileParams::natural()).unwrap();
        let best = rows.iter().max_by(|a, b| a.arc_length.total_cmp(&b.arc_length)).unwrap();
        assert!((best.theta - 0.9855).abs() <= spec.spacing());
    }

    #[test]
    fn sweep_scales_exactly() {
        let spec = SweepSpec::new(0.05, 1.5, 50).unwrap();
        let unit = sweep(&spec, ProjectileParams::natural()).unwrap();
        let big = sweep(&spec, ProjectileParams::new(2.0, 1.0).unwrap()).unwrap();
        for (u, b) in unit.iter().zip(&big) {
            assert_eq!(b.arc_length, 4.0 * u.arc_length);
        }
    }

    #[test]
    fn samples_examples() {
        let nat = ProjectileParams::natural();
        let s = trajectory_samples(Angle::new(FRAC_PI_4).unwrap(), nat, 3).unwrap();
        let expect = [(0.0, 0.0), (0.5, 0.25), (1.0, 0.0)];
        for (got, (x, y)) in s.iter().zip(expect) {
            assert!((got.x - x).abs() < 1e-15 && (got.y - y).abs() < 1e-15, "{got:?}");
        }
        let s = trajectory_samples(Angle::VERTICAL, nat, 3).unwrap();
        let expect = [(0.0, 0.0), (0.0, 0.5), (0.0, 0.0)];
        for (got, (x, y)) in s.iter().zip(expect) {
            assert!((got.x - x).abs() < 1e-15 && (got.y - y).abs() < 1e-15, "{got:?}");
        }
        assert!(trajectory_samples(Angle::VERTICAL, nat, 1).is_err());
    }

    #[test]
    fn samples_endpoints_and_ground() {
        let p = ProjectileParams::new(3.0, 9.8).unwrap();
        let s = trajectory_samples(Angle::new(1.1).unwrap(), p, 101).unwrap();
        assert_eq!((s[0].x, s[0].y), (0.0, 0.0));
        assert!(s.last().unwrap().y.abs() <= 1e-12);
        assert!(s.iter().all(|p| p.y >= -1e-12));
    }

    #[test]
    fn report_values() {
        let r = report_optimum().unwrap();
        assert!((r.theta_deg - 56.47).abs() < 0.01);
        assert!((r.max_length - 1.199_678_64).abs() < 1e-7);
        assert!((r.gap_percent - 4.52).abs() < 0.01);
        assert!(r.gap_percent > 4.5);
    }

    #[test]
    fn derivative_column_blank_at_vertical() {
        let spec = SweepSpec::new(1.5, FRAC_PI_2, 2).unwrap();
        let rows = sweep(&spec, ProjectileParams::natural()).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, &rows, AngleUnit::Radians).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let last = text.lines().last().unwrap();
        assert!(last.ends_with(','), "{last}");
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().next().unwrap(), "theta,arc_length,arc_length_derivative");
    }

    #[test]
    fn rejects_wrong_header() {
        let err = read_sweep_csv("a,b,c\n1,2,3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, CsvError::Header { .. }));
        let err = read_sweep_csv("theta,arc_length,arc_length_derivative\n1,x,3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, CsvError::Parse { .. }));
    }

    #[test]
    fn sweep_error_names_the_angle() {
        let err = row_at(2.0, ProjectileParams::natural(), &QuadratureConfig::default())
            .map_err(|e| Error::AtAngle { theta: 2.0, source: Box::new(e) })
            .unwrap_err();
        assert!(err.to_string().contains("θ = 2"));
    }

    proptest! {
        #[test]
        fn csv_round_trip_is_bit_exact(
            lo in 0.001f64..0.7,
            hi in 0.8f64..=FRAC_PI_2,
            steps in 2usize..40,
            v in 0.1f64..50.0,
            g in 0.1f64..50.0,
        ) {
            let spec = SweepSpec::new(lo, hi, steps).unwrap();
            let rows = sweep(&spec, ProjectileParams::new(v, g).unwrap()).unwrap();
            let mut buf = Vec::new();
            write_sweep_csv(&mut buf, &rows, AngleUnit::Radians).unwrap();
            let back = read_sweep_csv(buf.as_slice()).unwrap();
            prop_assert_eq!(back.len(), rows.len());
            for (a, b) in rows.iter().zip(&back) {
                prop_assert_eq!(a.theta.to_bits(), b.theta.to_bits());
                prop_assert_eq!(a.arc_length.to_bits(), b.arc_length.to_bits());
                prop_assert_eq!(a.arc_length_derivative.map(f64::to_bits), b.arc_length_derivative.map(f64::to_bits));
            }
        }

        #[test]
        fn trajectory_round_trip_is_bit_exact(th in 0.01f64..=FRAC_PI_2, n in 2usize..30) {
            let s = trajectory_samples(Angle::new(th).unwrap(), ProjectileParams::natural(), n).unwrap();
            let mut buf = Vec::new();
            write_trajectory_csv(&mut buf, &s, AngleUnit::Radians).unwrap();
            let back = read_trajectory_csv(buf.as_slice()).unwrap();
            for (a, b) in s.iter().zip(&back) {
                prop_assert_eq!([a.theta, a.t, a.x, a.y].map(f64::to_bits), [b.theta, b.t, b.x, b.y].map(f64::to_bits));
            }
        }
    }
}
