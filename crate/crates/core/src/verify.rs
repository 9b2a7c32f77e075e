//! Cross-checks between the closed forms and the numerical oracles.
//!
//! Each check compares two or more independent routes to the same quantity
//! and reports the worst discrepancy it saw. The `verify` subcommand prints
//! these and fails if any of them does.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::error::Result;
use crate::quadrature::{
    arc_length_quadrature, central_difference, interior_integral_quadrature, leibniz_derivative, projectile_integral,
    QuadratureConfig,
};
use crate::solver::{coth_fixed_point, maximize_arc_length_direct, optimal_angle, solve_critical_equation, RootConfig};
use crate::special::coth;
use crate::sweep::{polyline_length, sweep, trajectory_samples, SweepSpec, FAMILY_DEGREES};
use crate::trajectory::{
    arc_length_closed_form, arc_length_derivative_closed_form, flight_time, speed, Angle, ProjectileParams,
};

type Check = fn() -> Result<CheckOutcome>;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self { name, passed, detail }
    }
}

fn angle(theta: f64) -> Result<Angle> {
    Angle::new(theta)
}

fn theta_star() -> Result<f64> {
    Ok(optimal_angle(&RootConfig::coth_default())?.root)
}

fn check_optimal_angle() -> Result<CheckOutcome> {
    let t = theta_star()?;
    let deg = t.to_degrees();
    let ok = (t - 0.9855).abs() <= 1e-4 && (deg - 56.47).abs() <= 0.01;
    Ok(CheckOutcome::new("optimal angle", ok, format!("θ* = {t:.10} rad = {deg:.6}°")))
}

fn check_fixed_point() -> Result<CheckOutcome> {
    let alpha = coth_fixed_point(&RootConfig::coth_default())?.root;
    let resid = (coth(alpha) - alpha).abs();
    let l = arc_length_closed_form(angle(theta_star()?)?, ProjectileParams::natural())?;
    let ok = resid <= 1e-12 && (alpha - 1.199_678_6).abs() <= 1e-6 && (l - alpha).abs() <= 1e-10;
    Ok(CheckOutcome::new(
        "coth fixed point equals maximal length",
        ok,
        format!("α = {alpha:.12}, |coth α − α| = {resid:.1e}, |L(θ*) − α| = {:.1e}", (l - alpha).abs()),
    ))
}

fn check_routes_agree() -> Result<CheckOutcome> {
    let a = theta_star()?;
    let b = solve_critical_equation(&RootConfig::critical_default())?.root;
    let c = maximize_arc_length_direct(ProjectileParams::natural(), &RootConfig::search_default())?.root;
    let worst = (a - b).abs().max((a - c).abs()).max((b - c).abs());
    Ok(CheckOutcome::new("three solver routes agree", worst <= 1e-6, format!("max pairwise gap {worst:.1e} rad")))
}

fn check_paper_lengths() -> Result<CheckOutcome> {
    let nat = ProjectileParams::natural();
    let quad = QuadratureConfig::default();
    let mut ok = true;
    let mut detail = Vec::new();
    for (theta, expected) in [(FRAC_PI_4, 1.147_793_57), (theta_star()?, 1.199_678_64)] {
        let a = angle(theta)?;
        let closed = arc_length_closed_form(a, nat)?;
        let numeric = arc_length_quadrature(a, nat, &quad)?;
        ok &= (closed - expected).abs() <= 1e-7 && (numeric - expected).abs() <= 1e-7;
        ok &= (closed - numeric).abs() <= 1e-8;
        detail.push(format!("L({theta:.6}) = {closed:.10} (quadrature {numeric:.10})"));
    }
    Ok(CheckOutcome::new("reference arc lengths", ok, detail.join("; ")))
}

fn check_vertical() -> Result<CheckOutcome> {
    let l = arc_length_quadrature(Angle::VERTICAL, ProjectileParams::natural(), &QuadratureConfig::default())?;
    Ok(CheckOutcome::new("vertical launch length v²/g", (l - 1.0).abs() <= 1e-10, format!("L(π/2) = {l:.15}")))
}

fn check_gap() -> Result<CheckOutcome> {
    let nat = ProjectileParams::natural();
    let best = arc_length_closed_form(angle(theta_star()?)?, nat)?;
    let quarter = arc_length_closed_form(angle(FRAC_PI_4)?, nat)?;
    let gap = 100.0 * (best - quarter) / quarter;
    Ok(CheckOutcome::new("gain over 45°", gap > 4.5, format!("{gap:.4}%")))
}

fn check_derivatives() -> Result<CheckOutcome> {
    let nat = ProjectileParams::natural();
    let quad = QuadratureConfig::default();
    let pi = projectile_integral(nat);
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let theta = 0.1 + 1.35 * i as f64 / 19.0;
        let closed = arc_length_derivative_closed_form(angle(theta)?, nat)?;
        let leibniz = leibniz_derivative(&pi, theta, &quad)?;
        let fd = central_difference(|t| arc_length_quadrature(angle(t)?, nat, &quad), theta, 1e-6)?;
        worst = worst.max((closed - leibniz).abs()).max((closed - fd).abs()).max((leibniz - fd).abs());
    }
    Ok(CheckOutcome::new(
        "L' closed form, Leibniz and finite difference",
        worst <= 1e-5,
        format!("max gap {worst:.1e}"),
    ))
}

fn check_interior_integral() -> Result<CheckOutcome> {
    let quad = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for (v, g) in [(1.0, 1.0), (3.0, 9.8)] {
        let p = ProjectileParams::new(v, g)?;
        for i in 0..10 {
            let theta = 0.1 + 1.35 * i as f64 / 9.0;
            let s = f64::sin(theta);
            let closed = v * s / g * ((1.0 - s) / (1.0 + s)).ln();
            worst = worst.max((interior_integral_quadrature(angle(theta)?, p, &quad)? - closed).abs());
        }
    }
    Ok(CheckOutcome::new("interior integral log form", worst <= 1e-9, format!("max gap {worst:.1e}")))
}

fn check_parameter_independence() -> Result<CheckOutcome> {
    let t = theta_star()?;
    let mut worst: f64 = 0.0;
    let mut scale_err: f64 = 0.0;
    for (v, g) in [(0.3, 9.8), (7.0, 9.8), (40.0, 1.6), (95.0, 0.2)] {
        let p = ProjectileParams::new(v, g)?;
        worst = worst.max((maximize_arc_length_direct(p, &RootConfig::search_default())?.root - t).abs());
        for theta in [0.2, 0.9, 1.4] {
            let a = angle(theta)?;
            let unit = arc_length_closed_form(a, ProjectileParams::natural())?;
            let scaled = arc_length_closed_form(a, p)?;
            scale_err = scale_err.max((scaled - v * v / g * unit).abs() / scaled);
        }
    }
    Ok(CheckOutcome::new(
        "optimum independent of v and g",
        worst <= 1e-5 && scale_err <= 1e-12,
        format!("max argmax shift {worst:.1e} rad, max scaling error {scale_err:.1e}"),
    ))
}

fn check_landing_speed() -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for i in 0..10 {
        for j in 0..10 {
            for k in 0..10 {
                let theta = 0.01 + (FRAC_PI_2 - 0.01) * i as f64 / 9.0;
                let v = 0.1 * 1000f64.powf(j as f64 / 9.0);
                let g = 0.1 * 1000f64.powf(k as f64 / 9.0);
                let p = ProjectileParams::new(v, g)?;
                let a = angle(theta)?;
                worst = worst.max((speed(flight_time(a, p), a, p)? - v).abs() / v);
            }
        }
    }
    Ok(CheckOutcome::new("landing speed equals launch speed", worst <= 1e-12, format!("max relative gap {worst:.1e}")))
}

fn check_figures() -> Result<CheckOutcome> {
    let spec = SweepSpec::new(0.01, 1.56, 1000)?;
    let rows = sweep(&spec, ProjectileParams::natural())?;
    let peak =
        rows.iter().enumerate().max_by(|a, b| a.1.arc_length.total_cmp(&b.1.arc_length)).map(|(i, _)| i).unwrap_or(0);
    let unimodal = rows[..=peak].windows(2).all(|w| w[1].arc_length > w[0].arc_length)
        && rows[peak..].windows(2).all(|w| w[1].arc_length < w[0].arc_length);
    let near = (rows[peak].theta - theta_star()?).abs() <= spec.spacing();

    let mut ranges = Vec::new();
    let mut lengths = Vec::new();
    for deg in FAMILY_DEGREES {
        let s = trajectory_samples(Angle::from_degrees(deg)?, ProjectileParams::natural(), 2001)?;
        ranges.push(s.last().map_or(0.0, |p| p.x));
        lengths.push(polyline_length(&s));
    }
    let argmax = |xs: &[f64]| xs.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).map_or(0, |(i, _)| i);
    let family = FAMILY_DEGREES[argmax(&ranges)] == 45.0 && FAMILY_DEGREES[argmax(&lengths)] == 56.47;
    Ok(CheckOutcome::new(
        "figure data shape",
        unimodal && near && family,
        format!(
            "sweep peak at {:.5} rad (unimodal: {unimodal}); longest range at {}°, longest path at {}°",
            rows[peak].theta,
            FAMILY_DEGREES[argmax(&ranges)],
            FAMILY_DEGREES[argmax(&lengths)]
        ),
    ))
}

/// Runs every check. A check that errors out is reported as failed with the
/// error in its detail.
pub fn run_all() -> Vec<CheckOutcome> {
    let checks: [(&'static str, Check); 11] = [
        ("optimal angle", check_optimal_angle),
        ("coth fixed point equals maximal length", check_fixed_point),
        ("three solver routes agree", check_routes_agree),
        ("reference arc lengths", check_paper_lengths),
        ("vertical launch length v²/g", check_vertical),
        ("gain over 45°", check_gap),
        ("L' closed form, Leibniz and finite difference", check_derivatives),
        ("interior integral log form", check_interior_integral),
        ("optimum independent of v and g", check_parameter_independence),
        ("landing speed equals launch speed", check_landing_speed),
        ("figure data shape", check_figures),
    ];
    checks
        .into_iter()
        .map(|(name, check)| check().unwrap_or_else(|e| CheckOutcome::new(name, false, e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        for c in run_all() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
