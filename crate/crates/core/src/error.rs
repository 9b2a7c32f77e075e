use thiserror::Error;

/// Errors produced by the kinematics, quadrature and solver routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument falls outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A closed form diverges at the requested point.
    #[error("singular at {at}: {what}")]
    Singular { what: &'static str, at: f64 },

    /// A function returned NaN or an infinity.
    #[error("non-finite value {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },

    /// The bracket endpoints do not straddle a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// An iterative method ran out of iterations or recursion depth.
    #[error("no convergence after {iterations} steps (estimate {estimate})")]
    NonConvergence { iterations: usize, estimate: f64 },

    /// A failure inside a sweep, tagged with the angle that caused it.
    #[error("at θ = {theta}: {source}")]
    AtAngle { theta: f64, source: Box<Error> },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for the failure modes that indicate an iterative method gave up.
    pub fn is_non_convergence(&self) -> bool {
        match self {
            Error::NonConvergence { .. } => true,
            Error::AtAngle { source, .. } => source.is_non_convergence(),
            _ => false,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
