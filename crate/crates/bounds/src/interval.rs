use crate::BoundError;
use packbound_core::Scalar;
use serde::Serialize;

/// A two-sided enclosure with an audit trail of the checks that make it
/// sound.  For efficiency intervals `0 < lo <= hi <= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: Scalar,
    pub hi: Scalar,
    pub verified: Vec<String>,
}

impl Interval {
    pub fn new(lo: Scalar, hi: Scalar, verified: Vec<String>) -> Result<Self, BoundError> {
        if lo > hi {
            return Err(BoundError::EndpointsCrossed {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi, verified })
    }

    pub fn width(&self) -> Scalar {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Scalar) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Inputs to the tail bound for a family cut after `n` rectangles.
///
/// `s_tail` and `r_n` are upper bounds on the tail area and tail of squared
/// lengths; `l_next` bounds the next length from above; `q_prefix` and
/// `t0_prefix` describe the solved prefix packing the tail is appended to.
#[derive(Debug, Clone, Serialize)]
pub struct TailData {
    pub n: usize,
    pub s_tail: Scalar,
    pub r_n: Scalar,
    pub l_next: Scalar,
    pub w1: Scalar,
    pub q_prefix: Scalar,
    pub t0_prefix: Scalar,
}

impl TailData {
    /// Structural sanity: positivity and the C2 orderings `s_tail <= r_n`,
    /// `l_next^2 <= r_n`.
    pub fn check(&self) -> Result<(), BoundError> {
        let fail = |reason: String| Err(BoundError::InvalidTailData { reason });
        if self.s_tail.is_negative() {
            return fail(format!("s_tail = {} is negative", self.s_tail));
        }
        for (name, v) in [
            ("r_n", &self.r_n),
            ("l_next", &self.l_next),
            ("w1", &self.w1),
            ("q_prefix", &self.q_prefix),
            ("t0_prefix", &self.t0_prefix),
        ] {
            if !v.is_positive() {
                return fail(format!("{name} = {v} must be positive"));
            }
        }
        if self.s_tail > self.r_n {
            return fail(format!(
                "s_tail = {} exceeds r_n = {}; C2 gives w_k*l_k <= l_k^2",
                self.s_tail, self.r_n
            ));
        }
        if &(&self.l_next * &self.l_next) > &self.r_n {
            return fail(format!(
                "l_next^2 exceeds r_n = {}; the tail contains rectangle n+1",
                self.r_n
            ));
        }
        Ok(())
    }
}

/// How the strip-height term of the tail bound is charged.
///
/// `Analytic` uses the quadratic `a^2/8` term from the literature's packing
/// theorem; `Constructive` charges `a * l_next`, the width the shelf packer
/// in this workspace actually certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Analytic,
    Constructive,
}

/// Outcome of a refutation attempt.  There is deliberately no positive
/// variant: this calculus can only ever rule a perfect packing out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Refuted,
    Inconclusive,
}

/// A named bound with its inputs and the checks that were verified,
/// serialized for downstream consumers.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub kind: String,
    pub bound: Scalar,
    pub inputs: serde_json::Value,
    pub preconditions: Vec<String>,
}
