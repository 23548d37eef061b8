//! Side-length perturbations of a rectangle set.
//!
//! A perturbation assigns each rectangle a width delta and a length delta.
//! It is admissible for a set when every perturbed side stays positive;
//! the bound calculus only makes claims under that condition.

use packbound_core::{Rect, RectSet, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::TransformError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta {
    pub dw: Scalar,
    pub dl: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Perturbation {
    pub deltas: Vec<Delta>,
}

impl Perturbation {
    pub fn new(deltas: Vec<Delta>) -> Self {
        Perturbation { deltas }
    }

    pub fn zero(n: usize) -> Self {
        Perturbation {
            deltas: vec![
                Delta {
                    dw: Scalar::zero(),
                    dl: Scalar::zero(),
                };
                n
            ],
        }
    }

    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }

    /// Checks the admissibility condition for `set`: matching length and
    /// `w_i + dw_i > 0`, `l_i + dl_i > 0` for every rectangle.
    pub fn validate_for(&self, set: &RectSet) -> Result<(), TransformError> {
        if self.len() != set.len() {
            return Err(TransformError::DeltaCountMismatch {
                deltas: self.len(),
                rects: set.len(),
            });
        }
        for (i, (rect, delta)) in set.rects.iter().zip(&self.deltas).enumerate() {
            if !(&rect.w + &delta.dw).is_positive() {
                return Err(TransformError::PerturbationOutOfDomain {
                    index: i,
                    side: rect.w.to_string(),
                    delta: delta.dw.to_string(),
                });
            }
            if !(&rect.l + &delta.dl).is_positive() {
                return Err(TransformError::PerturbationOutOfDomain {
                    index: i,
                    side: rect.l.to_string(),
                    delta: delta.dl.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Applies the perturbation, validating admissibility first.
    pub fn apply(&self, set: &RectSet) -> Result<RectSet, TransformError> {
        self.validate_for(set)?;
        let rects = set
            .rects
            .iter()
            .zip(&self.deltas)
            .map(|(r, d)| Rect {
                w: &r.w + &d.dw,
                l: &r.l + &d.dl,
            })
            .collect();
        Ok(RectSet::new(rects))
    }

    pub fn sum_abs_dw(&self) -> Scalar {
        self.deltas.iter().map(|d| d.dw.abs()).sum()
    }

    pub fn sum_abs_dl(&self) -> Scalar {
        self.deltas.iter().map(|d| d.dl.abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.deltas.iter().all(|d| d.dw.is_zero() && d.dl.is_zero())
    }
}
