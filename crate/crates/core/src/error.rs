use thiserror::Error;

/// Errors raised by the geometry kernel.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("cannot parse `{input}` as an exact rational: {reason}")]
    Parse { input: String, reason: String },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("rectangle sides must be positive (index {index})")]
    NonPositiveSide { index: usize },

    #[error("operation requires a non-empty rectangle set")]
    EmptySet,

    #[error("{rects} rectangles but {origins} origins")]
    OriginCountMismatch { rects: usize, origins: usize },

    #[error("square root of a negative value")]
    NegativeSqrt,

    #[error("index {index} out of range (set has {len} rectangles)")]
    IndexOutOfRange { index: usize, len: usize },
}
