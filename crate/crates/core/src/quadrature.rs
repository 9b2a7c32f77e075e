//! Numerical oracles: adaptive Simpson integration, differentiation of
//! parametric integrals with moving limits, and central differences.
//!
//! These routines never call the closed forms in [`crate::trajectory`], so
//! they can be used to check them.
//!
//! Every function argument passed in here may be evaluated from several
//! threads if the caller parallelizes; closures must be `Sync` and free of
//! interior mutability that would make results order-dependent.

use crate::error::{Error, Result};
use crate::trajectory::{apex_time, flight_time, Angle, ProjectileParams};

/// Tolerances and interval splitting for [`integrate`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Maximum bisection depth of the adaptive recursion.
    pub max_depth: usize,
    /// Interior abscissae where the integrand may have a kink.
    pub split_points: Vec<f64>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-12, max_depth: 50, split_points: Vec::new() }
    }
}

impl QuadratureConfig {
    pub fn with_tolerances(rel_tol: f64, abs_tol: f64) -> Self {
        Self { rel_tol, abs_tol, ..Self::default() }
    }

    pub fn with_split_points(mut self, split_points: Vec<f64>) -> Self {
        self.split_points = split_points;
        self
    }

    fn validate(&self, a: f64, b: f64) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if self.max_depth == 0 {
            return Err(Error::domain("max_depth must be at least 1"));
        }
        let mut prev = a;
        for &p in &self.split_points {
            if !(p > prev && p < b) {
                return Err(Error::domain(format!(
                    "split points must be strictly increasing inside ({a}, {b}), got {:?}",
                    self.split_points
                )));
            }
            prev = p;
        }
        Ok(())
    }
}

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { x, value: y })
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

impl Panel {
    fn new<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Self> {
        let fa = eval(f, a)?;
        let fm = eval(f, 0.5 * (a + b))?;
        let fb = eval(f, b)?;
        Ok(Self { a, b, fa, fm, fb, whole: simpson(a, b, fa, fm, fb) })
    }
}

fn adapt<F: Fn(f64) -> f64>(f: &F, p: Panel, eps: f64, depth: usize) -> Result<f64> {
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let flm = eval(f, lm)?;
    let frm = eval(f, rm)?;
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let delta = left + right - p.whole;

    // The second test stops refinement once the difference is rounding noise.
    if delta.abs() <= 15.0 * eps || delta.abs() <= 64.0 * f64::EPSILON * (left.abs() + right.abs()) {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 || !(lm > p.a && rm < p.b) {
        return Err(Error::NonConvergence { iterations: depth, estimate: left + right });
    }
    let lp = Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left };
    let rp = Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right };
    Ok(adapt(f, lp, 0.5 * eps, depth - 1)? + adapt(f, rp, 0.5 * eps, depth - 1)?)
}

/// Integrates `f` over `[a, b]` with adaptive Simpson and Richardson
/// extrapolation.
///
/// The interval is cut at `config.split_points` and each piece is refined
/// independently. The error target is `max(rel_tol·|I|, abs_tol)`, with `|I|`
/// estimated from a coarse pass and shared among pieces in proportion to
/// their length.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, config: &QuadratureConfig) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain(format!("integration limits must be finite, got [{a}, {b}]")));
    }
    if a > b {
        return Err(Error::domain(format!("lower limit {a} exceeds upper limit {b}")));
    }
    if a == b {
        return Ok(0.0);
    }
    config.validate(a, b)?;

    let mut edges = Vec::with_capacity(config.split_points.len() + 2);
    edges.push(a);
    edges.extend_from_slice(&config.split_points);
    edges.push(b);

    let panels = edges.windows(2).map(|w| Panel::new(&f, w[0], w[1])).collect::<Result<Vec<_>>>()?;

    // coarse magnitude: composite Simpson with 8 panels per piece
    let mut coarse = 0.0;
    for p in &panels {
        let h = (p.b - p.a) / 8.0;
        for k in 0..8 {
            let x0 = p.a + k as f64 * h;
            let x1 = if k == 7 { p.b } else { x0 + h };
            coarse += simpson(x0, x1, eval(&f, x0)?, eval(&f, 0.5 * (x0 + x1))?, eval(&f, x1)?);
        }
    }
    let target = (config.rel_tol * coarse.abs()).max(config.abs_tol);
    let width = b - a;

    panels
        .into_iter()
        .map(|p| {
            let eps = target * (p.b - p.a) / width;
            adapt(&f, p, eps, config.max_depth)
        })
        .sum()
}

/// `(f(x + h) − f(x − h)) / 2h`.
pub fn central_difference<F>(f: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::domain(format!("difference step must be positive, got {h}")));
    }
    let hi = f(x + h)?;
    let lo = f(x - h)?;
    let d = (hi - lo) / (2.0 * h);
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::NonFinite { x, value: d })
    }
}

/// Default central-difference step `max(|x|, 1)·ε^(1/3)`.
pub fn default_step(x: f64) -> f64 {
    x.abs().max(1.0) * f64::EPSILON.cbrt()
}

type Integrand<'a> = Box<dyn Fn(f64, f64) -> f64 + Sync + 'a>;
type Limit<'a> = Box<dyn Fn(f64) -> f64 + Sync + 'a>;
type Splits<'a> = Box<dyn Fn(f64) -> Vec<f64> + Sync + 'a>;

/// `I(α) = ∫_{a(α)}^{b(α)} f(x, α) dx`, an integral whose integrand and
/// limits both depend on a parameter.
///
/// `∂f/∂α` may be supplied; otherwise it is taken by central difference in
/// `α`. No attempt is made to detect integrands whose partial derivative is
/// discontinuous, which would invalidate the interchange of derivative and
/// integral.
pub struct ParametricIntegral<'a> {
    integrand: Integrand<'a>,
    lower: Limit<'a>,
    upper: Limit<'a>,
    partial: Option<Integrand<'a>>,
    splits: Option<Splits<'a>>,
}

impl<'a> ParametricIntegral<'a> {
    pub fn new(
        integrand: impl Fn(f64, f64) -> f64 + Sync + 'a,
        lower: impl Fn(f64) -> f64 + Sync + 'a,
        upper: impl Fn(f64) -> f64 + Sync + 'a,
    ) -> Self {
        Self {
            integrand: Box::new(integrand),
            lower: Box::new(lower),
            upper: Box::new(upper),
            partial: None,
            splits: None,
        }
    }

    /// Supplies `∂f/∂α` analytically.
    pub fn with_partial(mut self, partial: impl Fn(f64, f64) -> f64 + Sync + 'a) -> Self {
        self.partial = Some(Box::new(partial));
        self
    }

    /// Supplies α-dependent split points, overriding those in the config.
    pub fn with_split_points(mut self, splits: impl Fn(f64) -> Vec<f64> + Sync + 'a) -> Self {
        self.splits = Some(Box::new(splits));
        self
    }

    fn limits(&self, alpha: f64) -> Result<(f64, f64)> {
        let a = (self.lower)(alpha);
        let b = (self.upper)(alpha);
        if !(a.is_finite() && b.is_finite()) || a > b {
            return Err(Error::domain(format!("integration limits [{a}, {b}] invalid at α = {alpha}")));
        }
        Ok((a, b))
    }

    fn config_at(&self, alpha: f64, config: &QuadratureConfig) -> QuadratureConfig {
        match &self.splits {
            Some(s) => config.clone().with_split_points(s(alpha)),
            None => config.clone(),
        }
    }

    /// Evaluates `I(α)` by quadrature.
    pub fn value(&self, alpha: f64, config: &QuadratureConfig) -> Result<f64> {
        let (a, b) = self.limits(alpha)?;
        integrate(|x| (self.integrand)(x, alpha), a, b, &self.config_at(alpha, config))
    }
}

/// `dI/dα = ∫ ∂f/∂α dx + f(b, α)·b'(α) − f(a, α)·a'(α)`.
///
/// The limit derivatives are central differences with step
/// `max(|α|, 1)·1e-6`; the interior term is integrated with `config`.
pub fn leibniz_derivative(pi: &ParametricIntegral<'_>, alpha: f64, config: &QuadratureConfig) -> Result<f64> {
    let h = alpha.abs().max(1.0) * 1e-6;
    let (a, b) = pi.limits(alpha)?;
    pi.limits(alpha - h)?;
    pi.limits(alpha + h)?;

    let da = central_difference(|s| Ok((pi.lower)(s)), alpha, h)?;
    let db = central_difference(|s| Ok((pi.upper)(s)), alpha, h)?;

    let cfg = pi.config_at(alpha, config);
    let interior = match &pi.partial {
        Some(partial) => integrate(|x| partial(x, alpha), a, b, &cfg)?,
        None => {
            let step = default_step(alpha);
            let f = &pi.integrand;
            integrate(|x| (f(x, alpha + step) - f(x, alpha - step)) / (2.0 * step), a, b, &cfg)?
        }
    };

    let fb = (pi.integrand)(b, alpha);
    let fa = (pi.integrand)(a, alpha);
    let d = interior + fb * db - fa * da;
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::NonFinite { x: alpha, value: d })
    }
}

/// The arc-length integral as a function of the launch angle, with the
/// analytic partial `∂f/∂θ = −g t · v cos θ / √(v² cos²θ + (v sin θ − g t)²)`.
pub fn projectile_integral(params: ProjectileParams) -> ParametricIntegral<'static> {
    let (v, g) = (params.v(), params.g());
    ParametricIntegral::new(
        move |t, theta: f64| {
            let (s, c) = theta.sin_cos();
            (v * c).hypot(v * s - g * t)
        },
        |_| 0.0,
        move |theta: f64| 2.0 * v * theta.sin() / g,
    )
    .with_partial(move |t, theta: f64| {
        let (s, c) = theta.sin_cos();
        -g * t * v * c / (v * c).hypot(v * s - g * t)
    })
    .with_split_points(move |theta: f64| vec![v * theta.sin() / g])
}

/// Arc length by integrating the speed over the flight time.
///
/// The interval is always split at the apex, where the integrand has a kink
/// for a vertical launch and sharp curvature close to it; any split points in
/// `config` are replaced.
pub fn arc_length_quadrature(theta: Angle, params: ProjectileParams, config: &QuadratureConfig) -> Result<f64> {
    let tau = flight_time(theta, params);
    let apex = apex_time(theta, params);
    let (s, c) = theta.radians().sin_cos();
    let (vx, vy0, g) = (params.v() * c, params.v() * s, params.g());
    let cfg = config.clone().with_split_points(vec![apex]);
    integrate(|t| vx.hypot(vy0 - g * t), 0.0, tau, &cfg)
}

/// `∫₀^τ −g t / √(v² cos²θ + (v sin θ − g t)²) dt` by quadrature: the integral
/// left over after pulling `v cos θ` out of the interior Leibniz term.
pub fn interior_integral_quadrature(theta: Angle, params: ProjectileParams, config: &QuadratureConfig) -> Result<f64> {
    let tau = flight_time(theta, params);
    let apex = apex_time(theta, params);
    let (s, c) = theta.radians().sin_cos();
    let (vx, vy0, g) = (params.v() * c, params.v() * s, params.g());
    let cfg = config.clone().with_split_points(vec![apex]);
    integrate(|t| -g * t / vx.hypot(vy0 - g * t), 0.0, tau, &cfg)
}
