//! Closed-form kinematics of an ideal projectile over flat ground.
//!
//! Everything here is a pure function of an [`Angle`] and a
//! [`ProjectileParams`]. Lengths scale as `v²/g` and times as `v/g`; the
//! closed forms are evaluated in natural units and multiplied by that factor,
//! so results at different `(v, g)` differ by exactly the scale factor.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::special::atanh_of_sin;

/// Launch speed and gravitational acceleration, both strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectileParams {
    v: f64,
    g: f64,
}

impl ProjectileParams {
    pub fn new(v: f64, g: f64) -> Result<Self> {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::domain(format!("launch speed must be positive and finite, got {v}")));
        }
        if !(g.is_finite() && g > 0.0) {
            return Err(Error::domain(format!("gravity must be positive and finite, got {g}")));
        }
        Ok(Self { v, g })
    }

    /// `v = g = 1`.
    pub const fn natural() -> Self {
        Self { v: 1.0, g: 1.0 }
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    /// The length scale `v²/g`.
    pub fn length_scale(&self) -> f64 {
        self.v * self.v / self.g
    }
}

impl Default for ProjectileParams {
    fn default() -> Self {
        Self::natural()
    }
}

/// Launch angle in radians, restricted to `(0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    /// Straight up. `FRAC_PI_2` is the largest accepted value.
    pub const VERTICAL: Angle = Angle(FRAC_PI_2);

    pub fn new(theta: f64) -> Result<Self> {
        if theta.is_finite() && theta > 0.0 && theta <= FRAC_PI_2 {
            Ok(Self(theta))
        } else {
            Err(Error::domain(format!("launch angle must lie in (0, π/2], got {theta} rad")))
        }
    }

    pub fn from_degrees(degrees: f64) -> Result<Self> {
        if degrees == 90.0 {
            return Ok(Self::VERTICAL);
        }
        Self::new(degrees.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    pub fn is_vertical(self) -> bool {
        self.0 == FRAC_PI_2
    }
}

/// Horizontal and vertical velocity components. `vy < 0` is downward.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityVector {
    pub vx: f64,
    pub vy: f64,
}

impl VelocityVector {
    pub fn norm(&self) -> f64 {
        self.vx.hypot(self.vy)
    }
}

/// Time until the projectile returns to the ground, `2 v sin θ / g`.
pub fn flight_time(theta: Angle, params: ProjectileParams) -> f64 {
    2.0 * params.v * theta.0.sin() / params.g
}

/// `dτ/dθ = 2 v cos θ / g`.
pub fn flight_time_derivative(theta: Angle, params: ProjectileParams) -> f64 {
    2.0 * params.v * theta.0.cos() / params.g
}

/// Time at the top of the arc, `v sin θ / g`.
pub fn apex_time(theta: Angle, params: ProjectileParams) -> f64 {
    params.v * theta.0.sin() / params.g
}

fn check_time(t: f64, theta: Angle, params: ProjectileParams) -> Result<()> {
    let tau = flight_time(theta, params);
    // A few ulps of slack so that t = τ computed by a caller is accepted.
    if t.is_finite() && t >= 0.0 && t <= tau * (1.0 + 4.0 * f64::EPSILON) {
        Ok(())
    } else {
        Err(Error::domain(format!("time {t} outside the flight interval [0, {tau}]")))
    }
}

pub fn velocity(t: f64, theta: Angle, params: ProjectileParams) -> Result<VelocityVector> {
    check_time(t, theta, params)?;
    let (s, c) = theta.0.sin_cos();
    Ok(VelocityVector { vx: params.v * c, vy: params.v * s - params.g * t })
}

/// Magnitude of the velocity: the integrand of the arc length.
pub fn speed(t: f64, theta: Angle, params: ProjectileParams) -> Result<f64> {
    velocity(t, theta, params).map(|w| w.norm())
}

/// Position `(x, y)` at time `t`, with `y` clamped to the ground.
pub fn position(t: f64, theta: Angle, params: ProjectileParams) -> Result<(f64, f64)> {
    check_time(t, theta, params)?;
    let (s, c) = theta.0.sin_cos();
    let x = params.v * t * c;
    let y = t * (params.v * s - 0.5 * params.g * t);
    Ok((x, y.max(0.0)))
}

/// `sin θ + cos²θ · atanh(sin θ)`, the arc length in natural units.
fn unit_arc_length(theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    s + c * c * atanh_of_sin(theta)
}

/// `2 cos θ · (1 − sin θ · atanh(sin θ))`, the derivative of
/// [`unit_arc_length`]. Identical to `2 cos θ + sin θ cos θ · ln((1 − sin θ)/(1 + sin θ))`.
fn unit_arc_length_derivative(theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    2.0 * c * (1.0 - s * atanh_of_sin(theta))
}

fn reject_vertical(theta: Angle, what: &'static str) -> Result<()> {
    if theta.is_vertical() {
        Err(Error::Singular { what, at: theta.0 })
    } else {
        Ok(())
    }
}

/// Arc length `(v²/g)·[sin θ + cos²θ · atanh(sin θ)]` for `θ < π/2`.
///
/// `atanh(sin θ)` diverges at `θ = π/2`, where the answer is `v²/g`; use
/// [`arc_length`] when the vertical launch must be covered.
pub fn arc_length_closed_form(theta: Angle, params: ProjectileParams) -> Result<f64> {
    reject_vertical(theta, "atanh(sin θ) in the arc-length closed form")?;
    Ok(params.length_scale() * unit_arc_length(theta.0))
}

/// Arc length on the whole of `(0, π/2]`: the closed form, or `v²/g` for a
/// vertical launch.
pub fn arc_length(theta: Angle, params: ProjectileParams) -> f64 {
    if theta.is_vertical() {
        params.length_scale()
    } else {
        params.length_scale() * unit_arc_length(theta.0)
    }
}

/// `L'(θ) = (2v² cos θ)/g + (v² sin θ cos θ)/g · ln((1 − sin θ)/(1 + sin θ))`.
///
/// Positive below the optimal angle and negative above it. The logarithm
/// diverges at `θ = π/2`.
pub fn arc_length_derivative_closed_form(theta: Angle, params: ProjectileParams) -> Result<f64> {
    reject_vertical(theta, "ln((1 − sin θ)/(1 + sin θ)) in L'(θ)")?;
    Ok(params.length_scale() * unit_arc_length_derivative(theta.0))
}

/// `sin θ · atanh(sin θ) − 1`. Strictly increasing on `(0, π/2)` and zero at
/// the angle of maximal arc length.
pub fn critical_residual(theta: Angle) -> Result<f64> {
    if theta.is_vertical() {
        return Err(Error::domain("critical residual diverges at θ = π/2"));
    }
    Ok(theta.0.sin() * atanh_of_sin(theta.0) - 1.0)
}

/// `d/dθ [sin θ · atanh(sin θ)] = cos θ · atanh(sin θ) + tan θ`.
pub fn critical_residual_derivative(theta: Angle) -> Result<f64> {
    if theta.is_vertical() {
        return Err(Error::domain("critical residual diverges at θ = π/2"));
    }
    let (s, c) = theta.0.sin_cos();
    Ok(c * atanh_of_sin(theta.0) + s / c)
}
