//! Error type shared by all modules.

/// Errors reported by evaluators and checks.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Row/column indices exceed the representation degree.
    #[error("index out of range: need |m| <= sigma and |n| <= sigma, got sigma={sigma}, m={m}, n={n}")]
    IndexOutOfRange { sigma: u32, m: i32, n: i32 },

    /// A series did not converge within the term cap.
    #[error("series did not converge within {max_terms} terms")]
    Convergence { max_terms: usize },

    /// The one-time convention calibration against the matrix-exponential
    /// oracle failed; evaluation conventions cannot be trusted.
    #[error("convention calibration failed: {0}")]
    Calibration(String),

    /// A check could not produce a verdict (for example, every probe of a
    /// ratio test was skipped).
    #[error("inconclusive check: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
