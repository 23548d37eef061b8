use packbound_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("C1 fails for t = {t}: the squared sides sum like a harmonic series or worse (need t > 1/2)")]
    C1Violation { t: String },

    #[error("prefix length must be at least 1")]
    EmptyPrefix,

    #[error("unknown family {name:?}; known: {known:?}")]
    UnknownFamily { name: String, known: Vec<String> },

    #[error("family {family:?} requires field {field:?}")]
    MissingField { family: String, field: String },

    #[error("bad field {field:?} for family {family:?}: {reason}")]
    InvalidField {
        family: String,
        field: String,
        reason: String,
    },

    #[error("enclosure precision out of range: {reason}")]
    PrecisionOverflow { reason: String },

    #[error(transparent)]
    Core(#[from] CoreError),
}
