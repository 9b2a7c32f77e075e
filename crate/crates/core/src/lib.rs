//! Arc length of an ideal projectile's trajectory and the launch angle that
//! maximizes it.
//!
//! The path of a point mass launched at speed `v` and angle `θ` over flat
//! ground under constant gravity `g` has length
//!
//! ```text
//! L(θ) = ∫₀^τ √(v² cos²θ + (v sin θ − g t)²) dt,   τ = 2 v sin θ / g
//! ```
//!
//! which evaluates to `(v²/g)·[sin θ + cos²θ · atanh(sin θ)]`. Its derivative
//! vanishes where `sin θ · atanh(sin θ) = 1`, equivalently
//! `csc θ = coth(csc θ)`, so the optimal angle is `asin(1/α)` with `α` the
//! positive fixed point of `coth`. The optimum does not depend on `v` or `g`.
//!
//! Modules:
//! - [`trajectory`]: closed-form kinematics, `L`, `L'` and the critical residual.
//! - [`quadrature`]: adaptive Simpson integration, a moving-limit Leibniz
//!   differentiator and central differences, used as independent oracles.
//! - [`solver`]: safeguarded Newton/bisection roots and golden-section search.
//! - [`sweep`]: angle sweeps, trajectory samples, the optimum report and CSV.
//! - [`verify`]: the cross-check suite behind the `verify` subcommand.
//!
//! ```
//! use projectile_arclength::{solver, trajectory::{arc_length_closed_form, Angle, ProjectileParams}};
//!
//! let theta = solver::optimal_angle(&solver::RootConfig::coth_default()).unwrap().root;
//! let l = arc_length_closed_form(Angle::new(theta).unwrap(), ProjectileParams::natural()).unwrap();
//! assert!((theta - 0.9855).abs() < 1e-4);
//! assert!((l - 1.19967864).abs() < 1e-7);
//! ```

pub mod error;
pub mod quadrature;
pub mod solver;
pub mod special;
pub mod sweep;
pub mod trajectory;
pub mod verify;

pub use error::{Error, Result};
