use thiserror::Error;

/// Errors raised by the analytic and simulation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{func}: argument out of domain ({msg})")]
    Domain { func: &'static str, msg: String },

    #[error("{what} did not converge within {limit} terms")]
    Convergence { what: &'static str, limit: usize },

    #[error("quadrature did not reach tolerance: {0}")]
    Quadrature(String),

    #[error("winding grid of {cells} cells needs {bytes} bytes, over the {cap}-byte budget")]
    MemoryBudget { cells: u64, bytes: u64, cap: u64 },

    #[error("inconsistent sector tally: {0}")]
    Inconsistent(String),

    #[error("walk parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, msg: impl Into<String>) -> Error {
    Error::Domain {
        func,
        msg: msg.into(),
    }
}
