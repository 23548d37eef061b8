use packbound_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ShelfError {
    #[error("strip height must be positive, got {height}")]
    NonPositiveHeight { height: String },

    #[error("rectangle {index} has length {length}, taller than the strip height {height}")]
    TooTall {
        index: usize,
        length: String,
        height: String,
    },

    #[error("strip height {height} exceeds the base positioning height {base_height}")]
    ExceedsBase { height: String, base_height: String },

    #[error(transparent)]
    Core(#[from] CoreError),
}
