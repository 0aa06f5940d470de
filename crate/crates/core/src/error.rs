//! Error type shared by the solver modules.

use core::fmt;

/// Failure modes of the model builders and solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A frequency or rate that must be positive was zero or negative.
    NonpositiveRate(&'static str),
    /// A quantity that must be nonnegative was negative.
    NegativeDrive(&'static str),
    /// Nonlinearity ratio is undefined: nonzero Kerr shift with zero drive.
    KerrUndefined,
    /// `i Delta_a2 + kappa_2` (or the eliminated cavity chain) vanished, so
    /// the cavities cannot be folded into the magnon equation.
    SingularConfiguration,
    /// The steady-state cubic produced no nonnegative real occupation.
    NoSteadyState,
    /// Probe response is divergent at this probe-pump detuning (rad/s).
    Pole { delta: f64, cond: f64 },
    /// Group delay needs a uniformly spaced grid.
    NonuniformGrid,
    /// Grid holds fewer points than the finite-difference stencils need.
    GridTooSmall { points: usize, min: usize },
    /// Grid bounds are not finite and increasing.
    BadGrid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonpositiveRate(name) => write!(f, "{name} must be positive"),
            Error::NegativeDrive(name) => write!(f, "{name} must be nonnegative"),
            Error::KerrUndefined => {
                write!(f, "Kerr ratio undefined: nonzero Kerr shift with zero drive")
            }
            Error::SingularConfiguration => {
                write!(f, "cavity chain is singular; cannot eliminate cavity modes")
            }
            Error::NoSteadyState => write!(f, "no nonnegative real steady-state occupation"),
            Error::Pole { delta, cond } => write!(
                f,
                "response divergent at delta = {delta:e} rad/s (condition {cond:e})"
            ),
            Error::NonuniformGrid => write!(f, "grid spacing is not uniform"),
            Error::GridTooSmall { points, min } => {
                write!(f, "grid has {points} points, need at least {min}")
            }
            Error::BadGrid(what) => write!(f, "bad grid: {what}"),
        }
    }
}

impl core::error::Error for Error {}
