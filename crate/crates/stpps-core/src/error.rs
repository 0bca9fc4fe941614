//! Crate-wide error type and exit-code mapping.
//!
//! Every fallible operation returns [`Error`]. The variants correspond to the
//! process exit codes used by the CLI: invalid input (3), infeasibility with
//! a certificate (2), internal inconsistency (4), and enumeration budgets
//! being exceeded (treated as invalid input at the process boundary).

use thiserror::Error;

/// Errors produced by library operations.
#[derive(Debug, Error)]
pub enum Error {
    /// The caller violated a precondition or supplied malformed data.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A problem instance is provably infeasible; the message describes the
    /// certificate (e.g. a violating partition or deficient vertex set).
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An enumeration budget (ground-set size or orientation product) was
    /// exceeded for a brute-force routine.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// An internal invariant failed; indicates a bug, never user error.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Process exit code associated with this error class.
    #[must_use]
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Infeasible(_) => 2,
            Error::InvalidInput(_) | Error::BudgetExceeded(_) => 3,
            Error::InternalInconsistency(_) => 4,
        }
    }
}

/// Convenient result alias for crate operations.
pub type Result<T> = std::result::Result<T, Error>;
