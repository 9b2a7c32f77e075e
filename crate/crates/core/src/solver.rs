//! One-dimensional solves for the optimal launch angle.
//!
//! Three independent routes reach the same angle:
//!
//! 1. the positive fixed point `α` of `coth`, mapped through `θ = asin(1/α)`;
//! 2. the root of `sin θ · atanh(sin θ) − 1`, which never evaluates `coth`;
//! 3. golden-section maximization of the quadrature arc length, which uses
//!    no derivative information at all.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::quadrature::{arc_length_quadrature, QuadratureConfig};
use crate::special::{coth, coth_prime};
use crate::trajectory::{critical_residual, critical_residual_derivative, Angle, ProjectileParams};

/// Bracket and stopping rule for a 1-D solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl RootConfig {
    pub const DEFAULT_TOL: f64 = 1e-12;
    pub const DEFAULT_MAX_ITER: usize = 200;

    pub fn new(bracket_lo: f64, bracket_hi: f64) -> Self {
        Self { bracket_lo, bracket_hi, tol: Self::DEFAULT_TOL, max_iter: Self::DEFAULT_MAX_ITER }
    }

    /// `[1, 2]`: `coth(x) > 1` for `x > 0` puts the fixed point above 1, and
    /// `coth(2) < 2`.
    pub fn coth_default() -> Self {
        Self::new(1.0, 2.0)
    }

    /// `[0.7, 1.3]`, where the critical residual changes sign.
    pub fn critical_default() -> Self {
        Self::new(0.7, 1.3)
    }

    /// `[0.1, π/2 − 1e-6]` for the direct maximization.
    pub fn search_default() -> Self {
        Self::new(0.1, FRAC_PI_2 - 1e-6)
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.bracket_lo.is_finite() && self.bracket_hi.is_finite() && self.bracket_lo < self.bracket_hi) {
            return Err(Error::domain(format!(
                "bracket [{}, {}] must be finite with lo < hi",
                self.bracket_lo, self.bracket_hi
            )));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::domain("tolerance must be positive"));
        }
        if self.max_iter == 0 {
            return Err(Error::domain("max_iter must be at least 1"));
        }
        Ok(())
    }
}

/// Outcome of a solve.
///
/// For root finders `residual` is the function value at `root`; for
/// [`golden_section_maximize`] it is the width of the final bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub root: f64,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn finite(x: f64, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { x, value })
    }
}

/// Bisection safeguarded Newton iteration on a sign-changing bracket.
///
/// A Newton step is taken only if it lands strictly inside the current
/// bracket; otherwise the bracket is bisected. Convergence requires both
/// `|f(x)| ≤ tol` and a step (or bracket width) below `tol·max(|x|, 1)`.
pub fn bracketed_root<F, D>(f: F, df: D, config: &RootConfig) -> Result<RootResult>
where
    F: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> Result<f64>,
{
    config.validate()?;
    let (mut lo, mut hi) = (config.bracket_lo, config.bracket_hi);
    let mut f_lo = finite(lo, f(lo)?)?;
    let f_hi = finite(hi, f(hi)?)?;
    if f_lo == 0.0 {
        return Ok(RootResult { root: lo, residual: 0.0, iterations: 0, converged: true });
    }
    if f_hi == 0.0 {
        return Ok(RootResult { root: hi, residual: 0.0, iterations: 0, converged: true });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }

    let mut x = 0.5 * (lo + hi);
    for iteration in 1..=config.max_iter {
        let fx = finite(x, f(x)?)?;
        if fx == 0.0 {
            return Ok(RootResult { root: x, residual: 0.0, iterations: iteration, converged: true });
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }

        let newton = df(x).map(|d| x - fx / d).unwrap_or(f64::NAN);
        let next = if newton.is_finite() && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        let scale = config.tol * x.abs().max(1.0);
        if fx.abs() <= config.tol && ((next - x).abs() <= scale || hi - lo <= scale) {
            return Ok(RootResult { root: x, residual: fx, iterations: iteration, converged: true });
        }
        x = next;
    }
    Err(Error::NonConvergence { iterations: config.max_iter, estimate: x })
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of a unimodal function on the
/// config bracket. Stops once the bracket is narrower than
/// `tol·max(|x|, 1)`.
pub fn golden_section_maximize<F>(f: F, config: &RootConfig) -> Result<RootResult>
where
    F: Fn(f64) -> Result<f64>,
{
    config.validate()?;
    let (mut a, mut b) = (config.bracket_lo, config.bracket_hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = finite(c, f(c)?)?;
    let mut fd = finite(d, f(d)?)?;

    for iteration in 1..=config.max_iter {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = finite(c, f(c)?)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = finite(d, f(d)?)?;
        }
        let mid = 0.5 * (a + b);
        if b - a <= config.tol * mid.abs().max(1.0) {
            let root = if fc >= fd { c } else { d };
            return Ok(RootResult { root, residual: b - a, iterations: iteration, converged: true });
        }
    }
    Err(Error::NonConvergence { iterations: config.max_iter, estimate: 0.5 * (a + b) })
}

/// The unique positive `α` with `coth(α) = α`.
///
/// `coth` decreases from `+∞` to 1 on `(0, ∞)` while the identity increases,
/// so `coth(x) − x` has exactly one sign change there.
pub fn coth_fixed_point(config: &RootConfig) -> Result<RootResult> {
    if config.bracket_lo <= 0.0 {
        return Err(Error::domain(format!(
            "coth fixed-point bracket must lie in (0, ∞), got lower end {}",
            config.bracket_lo
        )));
    }
    bracketed_root(|x| Ok(coth(x) - x), |x| Ok(coth_prime(x) - 1.0), config)
}

/// Launch angle of maximal arc length, `asin(1/α)` with `α` the fixed point
/// of `coth`. Takes no physical parameters: the optimum is independent of
/// launch speed and gravity.
///
/// `residual` is the critical residual at the returned angle.
pub fn optimal_angle(config: &RootConfig) -> Result<RootResult> {
    let alpha = coth_fixed_point(config)?;
    let theta = (1.0 / alpha.root).asin();
    let residual = critical_residual(Angle::new(theta)?)?;
    Ok(RootResult { root: theta, residual, ..alpha })
}

/// Root of `sin θ · atanh(sin θ) − 1` on `(0, π/2)`.
pub fn solve_critical_equation(config: &RootConfig) -> Result<RootResult> {
    if !(config.bracket_lo > 0.0 && config.bracket_hi < FRAC_PI_2) {
        return Err(Error::domain(format!(
            "critical-equation bracket must lie in (0, π/2), got [{}, {}]",
            config.bracket_lo, config.bracket_hi
        )));
    }
    bracketed_root(|t| critical_residual(Angle::new(t)?), |t| critical_residual_derivative(Angle::new(t)?), config)
}

/// Quadrature settings used by [`maximize_arc_length_direct`]. The maximum
/// is flat to second order, so objective noise `δ` moves the argmax by about
/// `√(δ/α)`; the tolerance is tightened accordingly.
pub fn direct_search_quadrature(params: ProjectileParams) -> QuadratureConfig {
    QuadratureConfig::with_tolerances(1e-14, 1e-16 * params.length_scale())
}

/// Argmax of the quadrature arc length by golden-section search, with no use
/// of the closed forms or derivatives.
pub fn maximize_arc_length_direct(params: ProjectileParams, config: &RootConfig) -> Result<RootResult> {
    if !(config.bracket_lo > 0.0 && config.bracket_hi <= FRAC_PI_2) {
        return Err(Error::domain(format!(
            "search bracket must lie in (0, π/2], got [{}, {}]",
            config.bracket_lo, config.bracket_hi
        )));
    }
    let quad = direct_search_quadrature(params);
    golden_section_maximize(|t| arc_length_quadrature(Angle::new(t)?, params, &quad), config)
}
