use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NwgError {
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),
    /// The extended dimension vector is not a root, so the variety is empty.
    #[error("empty variety: {0}")]
    EmptyVariety(String),
    /// A documented precondition of an operation was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),
    /// A consistency check derived from the theory failed.
    #[error("theorem contradiction: {0}")]
    Contradiction(String),
}

impl NwgError {
    /// Process exit code used by the command line tool and the C ABI.
    pub fn exit_code(&self) -> i32 {
        match self {
            NwgError::Input(_) => 2,
            NwgError::EmptyVariety(_) => 3,
            NwgError::Contract(_) | NwgError::Contradiction(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, NwgError>;
