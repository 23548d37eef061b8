use packbound_core::CoreError;
use packbound_families::FamilyError;
use packbound_solver::SolverError;
use packbound_transforms::TransformError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundError {
    #[error("tail data invalid: {reason}")]
    InvalidTailData { reason: String },

    #[error(
        "no admissible strip height: l_next = {l_next} exceeds q_prefix = {q_prefix} \
         (n not sufficiently large)"
    )]
    TailRangeEmpty { l_next: String, q_prefix: String },

    #[error("strip height a = {a} is outside the admissible range [{l_next}, {q_prefix}]")]
    HeightOutOfRange {
        a: String,
        l_next: String,
        q_prefix: String,
    },

    #[error("family profile check failed: {detail}")]
    ProfileFailed { detail: String },

    #[error("interval endpoints crossed: lo = {lo} > hi = {hi}")]
    EndpointsCrossed { lo: String, hi: String },

    #[error(transparent)]
    Transform(#[from] TransformError),

    #[error(transparent)]
    Solver(#[from] SolverError),

    #[error(transparent)]
    Family(#[from] FamilyError),

    #[error(transparent)]
    Core(#[from] CoreError),
}
