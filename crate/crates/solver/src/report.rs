//! Stable JSON view of a solve.
//!
//! Exact values are fraction strings; `*_decimal` fields are exact decimal
//! renderings at the requested precision. Node counts and timing are not
//! part of this view — they vary run to run and belong on the diagnostic
//! channel, while everything here is byte-deterministic.

use packbound_core::{Positioning, Scalar};
use serde::Serialize;

use crate::solve::SolveResult;

#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub t0: Scalar,
    pub t0_decimal: String,
    pub eta0: Scalar,
    pub eta0_decimal: String,
    pub proven_optimal: bool,
    pub t0_lower: Scalar,
    pub t0_lower_decimal: String,
    pub best: Positioning,
}

impl SolveResult {
    pub fn report(&self, digits: usize) -> SolveReport {
        SolveReport {
            t0: self.t0.clone(),
            t0_decimal: self.t0.decimal(digits),
            eta0: self.eta0.clone(),
            eta0_decimal: self.eta0.decimal(digits),
            proven_optimal: self.proven_optimal,
            t0_lower: self.t0_lower.clone(),
            t0_lower_decimal: self.t0_lower.decimal(digits),
            best: self.best.clone(),
        }
    }
}
