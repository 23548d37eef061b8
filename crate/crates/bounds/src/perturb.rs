use crate::BoundError;
use packbound_core::{RectSet, Scalar};
use packbound_solver::{min_bounding_area, SolveBudget};
use packbound_transforms::Perturbation;
use serde::Serialize;

/// Upper bound on the width extent of any optimal positioning of the
/// perturbed set: `sum w_i + sum |dw_i|`.
///
/// Sound because an optimal packing never has an uncovered vertical slice
/// (compacting one would shrink the bounding box), so its width extent is at
/// most the sum of the perturbed widths.
pub fn lemma2_p_bound(set: &RectSet, d: &Perturbation) -> Result<Scalar, BoundError> {
    d.validate_for(set)?;
    Ok(&set.sum_widths() + &d.sum_abs_dw())
}

/// Bound on the change of the optimal bounding area under a perturbation
/// that keeps every side positive:
///
/// `|dT0| <= (L + |dl|)(|dw|) + (W + |dw|)(|dl|) + (|dw|)(|dl|)`
///
/// where `W`, `L` sum the widths and lengths and `|dw|`, `|dl|` sum the
/// absolute side changes.
pub fn lemma3_bound(set: &RectSet, d: &Perturbation) -> Result<Scalar, BoundError> {
    d.validate_for(set)?;
    let w = set.sum_widths();
    let l = set.sum_lengths();
    let dw = d.sum_abs_dw();
    let dl = d.sum_abs_dl();
    Ok(&(&(&(&l + &dl) * &dw) + &(&(&w + &dw) * &dl)) + &(&dw * &dl))
}

/// Certified bound on the efficiency change, or a signal that the
/// denominator guard failed and no finite bound is certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "bound", rename_all = "snake_case")]
pub enum EtaModulus {
    Bounded(Scalar),
    Unbounded,
}

/// Bound on `|eta0(A') - eta0(A)|` for a perturbation `d` of `set`.
///
/// Uses the quotient expansion `|S'/T' - S/T| <= (|S'-S|*T + S*|T'-T|) /
/// (T * T'_lo)` with `|T'-T|` dominated by [`lemma3_bound`] and `T'_lo =
/// max(S', T - lemma3)`.  Solves `set` exactly to obtain `T`.
pub fn eta_modulus(
    set: &RectSet,
    d: &Perturbation,
    budget: &SolveBudget,
) -> Result<EtaModulus, BoundError> {
    d.validate_for(set)?;
    let result = min_bounding_area(set, budget)?;
    if !result.proven_optimal {
        return Err(BoundError::Solver(
            packbound_solver::SolverError::NotProven,
        ));
    }
    let t0 = result.t0;
    let s = set.total_area()?;
    let s_new = d.apply(set)?.total_area()?;
    let ds = (&s_new - &s).abs();
    let l3 = lemma3_bound(set, d)?;

    let t_new_lo = s_new.max(&t0 - &l3);
    if !t_new_lo.is_positive() {
        return Ok(EtaModulus::Unbounded);
    }
    Ok(EtaModulus::Bounded(
        &(&(&ds * &t0) + &(&s * &l3)) / &(&t0 * &t_new_lo),
    ))
}
