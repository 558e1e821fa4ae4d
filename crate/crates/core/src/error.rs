use thiserror::Error;

/// Errors produced by estimators, ingestion, and the evaluation harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid dataset: {0}")]
    InvalidDataset(String),
    #[error("degenerate data: {0}")]
    Degenerate(String),
    #[error("quadrature did not converge after {subdivisions} subdivisions (error estimate {error:.3e})")]
    QuadratureNonConvergence { subdivisions: usize, error: f64 },
    #[error("non-finite value encountered at argument {at}")]
    NonFinite { at: f64 },
    #[error("optimizer did not converge after {0} iterations")]
    OptimizerNonConvergence(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("missing quantity: {0}")]
    Missing(String),
    #[error("parse error at row {row}: {message}")]
    Parse { row: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
