//! Self-contained statistical kernel: dominant-eigenvalue extraction,
//! F/t distribution tails, ordinary least squares, and three-parameter
//! exponential fitting.
//!
//! Everything here is a pure function of its inputs; no shared state.

mod fit;
mod power;
mod special;

pub use fit::{f_test_nested, fit_exponential, fit_linear, t_test_slope_negative};
pub use power::max_eigenvalue;
pub use special::{f_upper_tail, ln_gamma, regularized_incomplete_beta, t_lower_tail};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumStatsError {
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("power iteration did not converge after {iters} iterations (last estimate {last_estimate})")]
    NonConvergence { iters: usize, last_estimate: f64 },
}

/// Ordinary least-squares line fit over iteration indices 0..n-1.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFit {
    /// Loss change per iteration.
    pub slope: f64,
    pub intercept: f64,
    /// Residual sum of squares.
    pub sse: f64,
    /// Standard error of the slope (n-2 degrees of freedom).
    pub slope_stderr: f64,
    pub n: usize,
}

/// Best fit of `amplitude * exp(-rate * t) + offset` over t = 0..n-1.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialFit {
    pub amplitude: f64,
    /// Decay rate per iteration; always >= 0.
    pub rate: f64,
    pub offset: f64,
    pub sse: f64,
    /// True when the rate search was pinned at a boundary of its domain.
    pub degenerate: bool,
}

/// Degrees of freedom for a test statistic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dof {
    Single(f64),
    Pair(f64, f64),
}

/// Outcome of a hypothesis test.
#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub statistic: f64,
    /// Probability in [0, 1]; direction documented per test.
    pub p_value: f64,
    pub dof: Dof,
}
