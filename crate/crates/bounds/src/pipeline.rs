use crate::{tail_bound, BoundError, Interval, Mode, TailData, Verdict};
use packbound_core::{RectSet, Scalar};
use packbound_families::{Family, Rounding};
use packbound_solver::{canonical_best, min_bounding_area, SolveBudget, SolveResult};
use serde::Serialize;

/// Two-sided enclosure of the supremum efficiency of a family, from an
/// exactly solved length-`n` prefix.
///
/// The upper end divides the total-area upper bound by a certified lower
/// bound on the prefix optimum (prefixes only get cheaper than the full
/// family).  The lower end charges the prefix optimum plus the cost of
/// appending the entire tail as a packed strip.  Directional rounding keeps
/// both ends sound for families with irrational sides: the solved prefix is
/// rounded down for the upper end and up for the lower end.
pub fn eta_interval(
    family: &dyn Family,
    n: usize,
    mode: Mode,
    budget: &SolveBudget,
) -> Result<Interval, BoundError> {
    let profile = family.validate_profile(n.max(8));
    if !profile.all_pass() {
        let detail = [&profile.c1, &profile.c2]
            .iter()
            .zip(["C1", "C2"])
            .filter_map(|(check, name)| match check {
                packbound_families::CheckOutcome::Pass => None,
                packbound_families::CheckOutcome::Fail(d) => Some(format!("{name}: {d}")),
            })
            .collect::<Vec<_>>()
            .join("; ");
        return Err(BoundError::ProfileFailed { detail });
    }
    let mut verified = vec![
        format!("C1 holds for {}", family.name()),
        format!("C2 holds on the first {} rectangles", n.max(8)),
    ];

    let (s_lo, s_hi) = family.s_total()?;
    let (_, tail_hi) = family.tail_area(n)?;

    let down = family.prefix(n, Rounding::Down)?;
    let up = family.prefix(n, Rounding::Up)?;
    let r_down = min_bounding_area(&down, budget)?;
    let r_up = if up == down {
        r_down.clone()
    } else {
        min_bounding_area(&up, budget)?
    };

    // upper end: eta0(A) = S/T0(A) <= S_hi / T0_lo(prefix)
    let t0_lo = if r_down.proven_optimal {
        verified.push(format!("prefix optimum proven at n = {n}"));
        r_down.t0.clone()
    } else {
        verified.push(format!(
            "prefix solve budget-limited at n = {n}: using the certified lower bound"
        ));
        r_down.t0_lower.clone()
    };
    let hi = (&s_hi / &t0_lo).min(Scalar::one());

    // lower end: some packing of the whole family fits in T0_up + tail cost
    let lo = if tail_hi.is_zero() {
        verified.push("tail empty: interval degenerates to the prefix value".into());
        &s_lo / &r_up.t0
    } else {
        let td = tail_data(family, n, &r_up)?;
        let cost = tail_bound(&td, mode)?;
        verified.push(format!(
            "tail admissible: l_next = {} <= q_prefix = {}",
            td.l_next, td.q_prefix
        ));
        &s_lo / &(&r_up.t0 + &cost)
    };

    Interval::new(lo, hi, verified)
}

fn tail_data(
    family: &dyn Family,
    n: usize,
    prefix_result: &SolveResult,
) -> Result<TailData, BoundError> {
    let measures = prefix_result.best.measures()?;
    Ok(TailData {
        n,
        s_tail: family.tail_area(n)?.1,
        r_n: family.tail_sq(n)?.1,
        l_next: family.l_next_upper(n)?,
        w1: prefix_result.best.set.rects[0].w.clone(),
        q_prefix: measures.q,
        t0_prefix: prefix_result.t0.clone(),
    })
}

/// Outcome of [`refute_perfect`]: the verdict plus the interval that
/// justifies it.
#[derive(Debug, Clone, Serialize)]
pub struct RefutationReport {
    pub verdict: Verdict,
    pub interval: Interval,
}

/// Attempts to rule out a perfect packing (`eta0 = 1`) for the family.
///
/// Refutes exactly when the certified upper end falls strictly below one;
/// anything else, including `hi = 1` on the nose, is inconclusive.
pub fn refute_perfect(
    family: &dyn Family,
    n: usize,
    mode: Mode,
    budget: &SolveBudget,
) -> Result<RefutationReport, BoundError> {
    let interval = eta_interval(family, n, mode, budget)?;
    let verdict = if interval.hi < Scalar::one() {
        Verdict::Refuted
    } else {
        Verdict::Inconclusive
    };
    Ok(RefutationReport { verdict, interval })
}

/// The width-expansion efficiency floor `l_1 / q(A_0)` for the canonical
/// optimal positioning `A_0` of `set`.
///
/// Contract: replacing `w_1` by `w_1 + dx` for any `dx > 0` keeps the
/// supremum efficiency at or above `min(eta0(set), floor)` — widening the
/// first rectangle inside its own row of the canonical packing wastes at
/// most the rest of that row.
pub fn expansion_floor(set: &RectSet) -> Result<Scalar, BoundError> {
    let canonical = canonical_best(set)?;
    let q = canonical.measures()?.q;
    Ok(&set.rects[0].l / &q)
}
