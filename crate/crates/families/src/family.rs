use crate::FamilyError;
use packbound_core::{RectSet, Scalar};
use serde::Serialize;

/// Direction to round when a side has no exact rational value.
///
/// `Down` shrinks every rectangle and is the sound direction when the prefix
/// feeds an optimal-area lower bound; `Up` grows every rectangle and is the
/// sound direction when the prefix must dominate the true rectangles in a
/// constructed packing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
}

/// A (possibly infinite) sequence of rectangles with certified aggregate data.
///
/// All bounds are exact rationals.  For families with irrational sides the
/// per-rectangle values are two-sided enclosures and the aggregate methods
/// return `(lo, hi)` pairs that are guaranteed to bracket the true value.
pub trait Family: Send + Sync {
    fn name(&self) -> String;

    /// `Some(k)` when the family has exactly `k` rectangles.
    fn finite_len(&self) -> Option<usize> {
        None
    }

    /// First `n` rectangles, rounded in the given direction.  Finite
    /// families return at most their own length.
    fn prefix(&self, n: usize, rounding: Rounding) -> Result<RectSet, FamilyError>;

    /// Enclosure of the total area `S = sum w_i * l_i`.
    fn s_total(&self) -> Result<(Scalar, Scalar), FamilyError>;

    /// Enclosure of the tail area `sum_{i > n} w_i * l_i`.
    fn tail_area(&self, n: usize) -> Result<(Scalar, Scalar), FamilyError>;

    /// Enclosure of the squared-length tail `R_n = sum_{i > n} l_i^2`.
    fn tail_sq(&self, n: usize) -> Result<(Scalar, Scalar), FamilyError>;

    /// Upper bound on `l_{n+1}` (zero once a finite family is exhausted).
    fn l_next_upper(&self, n: usize) -> Result<Scalar, FamilyError>;

    /// Diagnostic C1/C2 report; never fails, C2 is checked on the first
    /// `prefix_len` rectangles.
    fn validate_profile(&self, prefix_len: usize) -> ProfileReport;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail(String),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

/// Outcome of the structural profile checks.
///
/// C1: the squared lengths have a finite sum, witnessed by a tail
/// certificate.  C2: `w_i <= l_i` and `l_{i+1} <= l_i` elementwise.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileReport {
    pub family: String,
    pub c1: CheckOutcome,
    pub c2: CheckOutcome,
    pub notes: Vec<String>,
}

impl ProfileReport {
    pub fn all_pass(&self) -> bool {
        self.c1.passed() && self.c2.passed()
    }
}

/// Elementwise C2 check shared by the concrete families.
pub(crate) fn check_c2(rects: &RectSet) -> CheckOutcome {
    for (i, r) in rects.rects.iter().enumerate() {
        if r.w > r.l {
            return CheckOutcome::Fail(format!(
                "rectangle {i} has w = {} > l = {}",
                r.w, r.l
            ));
        }
        if i + 1 < rects.len() && rects.rects[i + 1].l > r.l {
            return CheckOutcome::Fail(format!(
                "lengths increase from {} to {} at index {i}",
                r.l,
                rects.rects[i + 1].l
            ));
        }
    }
    CheckOutcome::Pass
}
