use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid oscillator parameters: {0}")]
    InvalidParams(String),

    #[error("dimension mismatch: operator is {expected}x{expected}, state has {found} entries")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("level {n} is outside the truncated basis 0..={n_max}")]
    OutOfRange { n: usize, n_max: usize },

    #[error("state is not normalized: squared norm {norm_sqr} (tolerance {tolerance:e})")]
    NotNormalized { norm_sqr: f64, tolerance: f64 },

    #[error("variance of {quantity} is negative beyond rounding: {value:e}")]
    NegativeVariance { quantity: &'static str, value: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("trajectory needs at least {required} records, got {found}")]
    TooFewRecords { required: usize, found: usize },

    #[error("trajectory times are not uniformly spaced by dt = {dt} at record {index}")]
    NonUniformSpacing { dt: f64, index: usize },

    #[error("no n_max up to {cap} brings the truncation tail below {tolerance:e} (tail at cap: {tail:e})")]
    TruncationCap {
        cap: usize,
        tolerance: f64,
        tail: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
