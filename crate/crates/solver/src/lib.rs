//! Exact solver for the minimal bounding area of a finite rectangle set.
//!
//! Positionings are searched through sequence pairs: a pair of permutations
//! of the rectangle indices that fixes, for every two rectangles, whether one
//! is left of or below the other. Sequence pairs are complete for valid
//! fixed-orientation packings (asserted by the re-encode property tests), so
//! the minimum bounding area over all decoded pairs is exactly `T0`.
//!
//! [`min_bounding_area`] runs a branch-and-bound over that space with exact
//! integer arithmetic (sides are rescaled by the common denominator) and an
//! optional node/time budget. [`oracle_min_area`] is the independent
//! brute-force reference used by the test suites: it enumerates every pair
//! without pruning.

pub mod budget;
pub mod error;
mod num;
pub mod oracle;
pub mod report;
mod search;
pub mod sequence_pair;
pub mod solve;

pub use budget::SolveBudget;
pub use error::SolverError;
pub use oracle::{oracle_min_area, ORACLE_MAX_N};
pub use report::SolveReport;
pub use sequence_pair::{decode, encode, SequencePair};
pub use solve::{canonical_best, canonical_best_with, certified_lower_bound, min_bounding_area, SolveResult};
