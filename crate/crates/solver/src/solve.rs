//! Public solver entry points: exact `T0`, certified bounds, canonical
//! optimal positioning.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use packbound_core::{Point, Positioning, RectSet, Scalar};

use crate::budget::SolveBudget;
use crate::error::SolverError;
use crate::num::SolverInt;
use crate::search::{run_search, Candidate, Instance, Outcome};

/// Exact solve outcome. When `proven_optimal`, `t0` is the exact minimal
/// bounding area and `best` attains it; otherwise `t0 = T(best)` is an upper
/// bound and `t0_lower` the certified lower bound.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub t0: Scalar,
    pub eta0: Scalar,
    pub best: Positioning,
    pub nodes_explored: u64,
    pub proven_optimal: bool,
    pub t0_lower: Scalar,
}

/// `max(S(A), largest single rectangle area)`: the lower bound reported for
/// budget-capped runs. (The total dominates any single area; both terms are
/// kept because budget reports state them separately.)
pub fn certified_lower_bound(set: &RectSet) -> Result<Scalar, SolverError> {
    let total = set.total_area()?;
    let largest = set
        .rects
        .iter()
        .map(|r| r.area())
        .max()
        .expect("non-empty");
    Ok(total.max(largest))
}

/// Common denominator of every side; multiplying by it makes all geometry
/// integral without changing `eta` (scale invariance).
fn common_denominator(set: &RectSet) -> BigInt {
    let mut d = BigInt::one();
    for r in &set.rects {
        d = d.lcm(r.w.denom());
        d = d.lcm(r.l.denom());
    }
    d
}

fn scaled_side(side: &Scalar, d: &BigInt) -> BigInt {
    // side * d is integral because d is a multiple of the denominator
    (side.numer() * d) / side.denom()
}

fn unscale(candidate: &Candidate<impl SolverInt>, set: &RectSet, d: &BigInt) -> (Scalar, Positioning) {
    let d2 = d * d;
    let t0 = Scalar::big_ratio(candidate.t.to_bigint(), d2).expect("nonzero denominator");
    let origins = (0..set.len())
        .map(|i| {
            Point::new(
                Scalar::big_ratio(candidate.flat[2 * i].to_bigint(), d.clone())
                    .expect("nonzero denominator"),
                Scalar::big_ratio(candidate.flat[2 * i + 1].to_bigint(), d.clone())
                    .expect("nonzero denominator"),
            )
        })
        .collect();
    let best = Positioning {
        set: set.clone(),
        origins,
    };
    (t0, best)
}

/// Exact minimum bounding area by branch-and-bound over sequence pairs.
///
/// Within budget the result is proven optimal and deterministic (including
/// the canonical tie-break) regardless of thread count. On budget
/// exhaustion the best packing found so far is returned together with the
/// certified lower bound, flagged `proven_optimal = false`.
pub fn min_bounding_area(set: &RectSet, budget: &SolveBudget) -> Result<SolveResult, SolverError> {
    let n = set.len();
    if n == 0 {
        return Err(SolverError::EmptySet);
    }
    if n > budget.max_n {
        return Err(SolverError::TooLarge {
            n,
            max: budget.max_n,
        });
    }

    let d = common_denominator(set);
    let ws: Vec<BigInt> = set.rects.iter().map(|r| scaled_side(&r.w, &d)).collect();
    let ls: Vec<BigInt> = set.rects.iter().map(|r| scaled_side(&r.l, &d)).collect();

    // The largest integer the search can form is bounded by the product of
    // total extents; pick i128 when that fits with ample headroom.
    let extent_product: BigInt = ws.iter().sum::<BigInt>() * ls.iter().sum::<BigInt>();
    let outcome_scalar: (Scalar, Positioning, u64, bool) = if extent_product < (BigInt::one() << 120)
    {
        let inst = Instance::new(
            ws.iter().map(|v| I128::from_big(v)).collect(),
            ls.iter().map(|v| I128::from_big(v)).collect(),
        );
        let Outcome {
            best,
            nodes,
            completed,
        } = run_search(&inst, budget);
        let (t0, pos) = unscale(&best, set, &d);
        (t0, pos, nodes, completed)
    } else {
        let inst = Instance::new(ws, ls);
        let Outcome {
            best,
            nodes,
            completed,
        } = run_search(&inst, budget);
        let (t0, pos) = unscale(&best, set, &d);
        (t0, pos, nodes, completed)
    };
    let (t0, best, nodes_explored, proven_optimal) = outcome_scalar;

    debug_assert!(best.is_valid(), "solver produced an invalid packing");
    let total = set.total_area()?;
    let eta0 = &total / &t0;
    let t0_lower = if proven_optimal {
        t0.clone()
    } else {
        certified_lower_bound(set)?
    };
    Ok(SolveResult {
        t0,
        eta0,
        best,
        nodes_explored,
        proven_optimal,
        t0_lower,
    })
}

// Small helper so the generic instance construction reads the same on both
// integer paths.
type I128 = i128;
trait FromBig {
    fn from_big(v: &BigInt) -> Self;
}
impl FromBig for i128 {
    fn from_big(v: &BigInt) -> Self {
        <i128 as SolverInt>::try_from_bigint(v).expect("guarded by extent product")
    }
}

/// Canonical optimal positioning under the published tie-break
/// (minimal `T`, then `p`, then lexicographic origin vector). Requires a
/// proven solve.
pub fn canonical_best(set: &RectSet) -> Result<Positioning, SolverError> {
    canonical_best_with(set, &SolveBudget::default())
}

pub fn canonical_best_with(
    set: &RectSet,
    budget: &SolveBudget,
) -> Result<Positioning, SolverError> {
    let result = min_bounding_area(set, budget)?;
    if !result.proven_optimal {
        return Err(SolverError::NotProven);
    }
    Ok(result.best)
}
