//! Hyperbolic helpers used by the closed forms and the solvers.

/// Inverse hyperbolic tangent as `½·ln((1+x)/(1−x))`, evaluated through
/// `ln_1p(2x/(1−x))` so that small `x` and `x` close to 1 keep full relative
/// precision. Returns `±∞` at `x = ±1` and NaN outside `[-1, 1]`.
pub fn atanh(x: f64) -> f64 {
    if x.abs() > 1.0 {
        return f64::NAN;
    }
    let sign = x.signum();
    let ax = x.abs();
    if ax == 1.0 {
        return sign * f64::INFINITY;
    }
    sign * 0.5 * (2.0 * ax / (1.0 - ax)).ln_1p()
}

/// `atanh(sin θ)` written as `ln((1 + sin θ)/cos θ)`.
///
/// Near `θ = π/2` the factor `1 − sin θ` cancels catastrophically while
/// `cos θ` does not, so this form stays accurate up to the singular endpoint.
pub fn atanh_of_sin(theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    if s.abs() < 0.5 {
        atanh(s)
    } else {
        ((1.0 + s.abs()) / c.abs()).ln() * s.signum()
    }
}

/// Hyperbolic cotangent. Infinite at zero.
pub fn coth(x: f64) -> f64 {
    if x == 0.0 {
        return f64::INFINITY.copysign(x);
    }
    // tanh saturates to 1 well before exp overflows, so this is safe for large |x|.
    1.0 / x.tanh()
}

/// Derivative of `coth`, `−csch²(x)`.
pub fn coth_prime(x: f64) -> f64 {
    let s = x.sinh();
    -1.0 / (s * s)
}
