use thiserror::Error;

pub type Result<T, E = NblError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum NblError {
    #[error("length mismatch: {left} vs {right} clock periods")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected} noise-bits, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("time average is undefined for an empty wave")]
    EmptyAverage,

    #[error("sample {value} at clock {index} is not bipolar (expected -1 or +1)")]
    NotBipolar { index: usize, value: i64 },

    #[error("{what} = {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("bit index {index} is outside 1..={bits}")]
    BitOutOfRange { index: usize, bits: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl NblError {
    /// True for errors caused by the caller's input rather than by the
    /// environment (I/O, serialization).
    pub fn is_config_error(&self) -> bool {
        !matches!(self, NblError::Io(_) | NblError::Csv(_) | NblError::Json(_))
    }
}
