use packbound_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("rectangle index {index} out of range (set has {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("retraction amount must satisfy 0 < dx < side (got {dx}, side {side})")]
    RetractOutOfRange { dx: String, side: String },

    #[error("extension amount must be positive (got {value})")]
    NonPositiveExtension { value: String },

    #[error("prefix length {n} out of range 1..={len}")]
    CountOutOfRange { n: usize, len: usize },

    #[error("scale factor must be positive (got {value})")]
    NonPositiveFactor { value: String },

    #[error("perturbation has {deltas} deltas but the set has {rects} rectangles")]
    DeltaCountMismatch { deltas: usize, rects: usize },

    #[error("perturbed side of rectangle {index} would be nonpositive (side {side}, delta {delta})")]
    PerturbationOutOfDomain {
        index: usize,
        side: String,
        delta: String,
    },

    #[error("unknown transform op `{name}` (known: {known})")]
    UnknownOp { name: String, known: String },

    #[error("transform `{op}` requires parameter `{param}`")]
    MissingParam { op: &'static str, param: &'static str },

    #[error(transparent)]
    Core(#[from] CoreError),
}
