use thiserror::Error;

/// Errors raised by the pendulum and elliptic-integral routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iteration (AGM, bisection) did not meet its tolerance within its cap.
    #[error("no convergence after {iterations} iterations (residual {gap:e})")]
    NonConvergence { iterations: usize, gap: f64 },

    /// The adaptive quadrature could not meet its error target.
    #[error(
        "quadrature error estimate {estimate:e} above target {target:e} after {evaluations} evaluations"
    )]
    AccuracyNotReached {
        estimate: f64,
        target: f64,
        evaluations: usize,
    },

    /// A closed-form bound was requested for an order that has none.
    #[error("no closed-form Ingham bound for order {0} (supported: 2, 3)")]
    UnsupportedOrder(usize),

    /// A monotone inversion has no interior solution. `nearest` is the end of
    /// the search interval the solution would lie beyond.
    #[error("no solution in the open interval; nearest end is {nearest}")]
    NoSolution { nearest: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::AccuracyNotReached { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
