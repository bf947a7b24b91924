use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph construction: {0}")]
    Construction(String),

    #[error("vertex {0} is isolated (degree 0)")]
    IsolatedVertex(usize),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("{0}")]
    Domain(String),

    #[error("mesh has {points} points; the alternation oracle supports at most {max}")]
    OracleScale { points: usize, max: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::Domain(message.into()))
}
