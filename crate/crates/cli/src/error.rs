use std::fmt;
use winding_atlas::Error as CoreError;

/// Failure classes, each with its own process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Some acceptance checks failed (exit 1).
    Validation(String),
    /// Invalid flags or configuration (exit 2).
    Usage(String),
    /// Memory budget, I/O or thread pool failure (exit 3).
    Resource(String),
    /// Quadrature or series failure (exit 4).
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }

    /// Core error with some context prepended.
    pub fn core(context: impl fmt::Display, e: CoreError) -> Self {
        let msg = format!("{context}: {e}");
        match e {
            CoreError::Domain { .. } | CoreError::Parse { .. } => CliError::Usage(msg),
            CoreError::MemoryBudget { .. } => CliError::Resource(msg),
            CoreError::Convergence { .. } | CoreError::Quadrature(_) | CoreError::Inconsistent(_) => {
                CliError::Numerical(msg)
            }
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) | CliError::Usage(m) | CliError::Resource(m) | CliError::Numerical(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Resource(format!("i/o: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Resource(format!("csv: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("json: {e}"))
    }
}
