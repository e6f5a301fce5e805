use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("size mismatch: graph has {expected} vertices, assignment has {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("assignment is infeasible: {0}")]
    Infeasible(String),

    #[error("instance too large for exhaustive search: n = {n}, limit = {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("beta = {beta} is outside the domain of this bound (requires beta > {min})")]
    OutOfDomain { beta: f64, min: f64 },

    #[error("rounding invariant violated: {0}")]
    Invariant(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
