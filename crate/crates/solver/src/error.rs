use packbound_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("solver requires a non-empty rectangle set")]
    EmptySet,

    #[error("instance has {n} rectangles, above the solver limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("oracle accepts at most {max} rectangles (got {n})")]
    OracleTooLarge { n: usize, max: usize },

    #[error("sequence pair of {pair} indices used with a set of {set} rectangles")]
    SizeMismatch { pair: usize, set: usize },

    #[error("sequence order is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },

    #[error("optimality was not proven within the budget; canonical positioning unavailable")]
    NotProven,

    #[error("separation constraints contain a cycle; the positioning is not valid")]
    EncodeCycle,

    #[error(transparent)]
    Core(#[from] CoreError),
}
