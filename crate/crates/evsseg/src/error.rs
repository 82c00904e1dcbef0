//! Error types shared across the crate.
//!
//! The CLI maps these onto exit codes: usage problems are caught before any
//! library call, data/format problems map to code 2, numeric failures to 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Shape-incompatible tensor operation; names the op and the dims involved.
    #[error("shape mismatch in {op}: {details}")]
    Shape { op: &'static str, details: String },

    /// Malformed input text; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structurally valid input that violates a format invariant
    /// (decreasing timestamps, out-of-bounds coordinates, label count).
    #[error("format error: {0}")]
    Format(String),

    /// Bad magic or unsupported checkpoint version.
    #[error("checkpoint version error: {0}")]
    Version(String),

    /// Truncated or internally inconsistent checkpoint payload.
    #[error("checkpoint corruption: {0}")]
    Corruption(String),

    /// Invalid configuration or a config/architecture disagreement.
    #[error("config error: {0}")]
    Config(String),

    /// A documented precondition was violated by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Non-finite value where a finite one is required.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Training-loop failure, e.g. a non-finite gradient.
    #[error("training error: {0}")]
    Training(String),

    /// Threshold calibration cannot separate identical entropies.
    #[error("degenerate calibration: {0}")]
    DegenerateCalibration(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn shape(op: &'static str, details: impl Into<String>) -> Self {
        Error::Shape { op, details: details.into() }
    }
}
