//! Certified bound calculus on top of the exact solver.
//!
//! Everything here returns exact rationals with an explicit soundness
//! direction: perturbation bounds dominate the true change in the optimal
//! bounding area, tail bounds dominate the cost of appending an infinite
//! tail to a solved prefix, and the resulting efficiency intervals are
//! guaranteed to contain the true supremum efficiency of a family.  The
//! refutation pipeline turns the upper endpoint into one-sided negative
//! certificates for perfect packings: `hi < 1` rules one out, and nothing
//! here ever claims the converse.

mod error;
mod interval;
mod perturb;
mod pipeline;
mod tail;

pub use error::BoundError;
pub use interval::{BoundReport, Interval, Mode, TailData, Verdict};
pub use perturb::{eta_modulus, lemma2_p_bound, lemma3_bound, EtaModulus};
pub use pipeline::{eta_interval, expansion_floor, refute_perfect, RefutationReport};
pub use tail::{tail_bound, tail_bound_at};
