use crate::{BoundError, Mode, TailData};
use packbound_core::Scalar;

/// Fractional bits used to rationalize the analytic minimizer `4*sqrt(S_tail)`.
const MINIMIZER_BITS: u32 = 64;

/// Cost of appending the whole tail to the solved prefix, evaluated at a
/// chosen strip height `a` with `l_next <= a <= q_prefix`:
///
/// * analytic: `q_prefix * (2*s_tail + a^2/8) / a`
/// * constructive: `q_prefix * (2*s_tail/a + l_next)`, the width the shelf
///   packer certifies (under C2 every tail width is at most `l_next`)
///
/// The inequality behind the bound holds at every admissible `a`, so any
/// rational choice is sound; [`tail_bound`] picks one near the minimizer.
pub fn tail_bound_at(td: &TailData, a: &Scalar, mode: Mode) -> Result<Scalar, BoundError> {
    td.check()?;
    if a < &td.l_next || a > &td.q_prefix {
        return Err(BoundError::HeightOutOfRange {
            a: a.to_string(),
            l_next: td.l_next.to_string(),
            q_prefix: td.q_prefix.to_string(),
        });
    }
    let two_s = &Scalar::from_int(2) * &td.s_tail;
    Ok(match mode {
        Mode::Analytic => {
            let term = &two_s + &(&(a * a) / &Scalar::from_int(8));
            &(&td.q_prefix * &term) / a
        }
        Mode::Constructive => &td.q_prefix * &(&(&two_s / a) + &td.l_next),
    })
}

/// [`tail_bound_at`] evaluated at a sound rational approximation of the
/// minimizing strip height, clamped to the admissible range
/// `[l_next, q_prefix]`.
///
/// Analytic mode minimizes `(2*s_tail + a^2/8)/a` at `a = 4*sqrt(s_tail)`;
/// constructive mode is monotone decreasing in `a`, so it takes
/// `a = q_prefix`.  A zero tail with no next rectangle costs nothing.
pub fn tail_bound(td: &TailData, mode: Mode) -> Result<Scalar, BoundError> {
    if td.s_tail.is_zero() && td.l_next.is_zero() {
        return Ok(Scalar::zero());
    }
    td.check()?;
    if td.l_next > td.q_prefix {
        return Err(BoundError::TailRangeEmpty {
            l_next: td.l_next.to_string(),
            q_prefix: td.q_prefix.to_string(),
        });
    }
    let a = match mode {
        Mode::Analytic => {
            // 4*sqrt(s_tail) = sqrt(16*s_tail), rounded up; exactness of the
            // enclosure is irrelevant because any admissible a is sound
            let (_, root_hi) = (&Scalar::from_int(16) * &td.s_tail)
                .sqrt_enclosure(MINIMIZER_BITS)
                .map_err(BoundError::Core)?;
            root_hi
                .max(td.l_next.clone())
                .min(td.q_prefix.clone())
        }
        Mode::Constructive => td.q_prefix.clone(),
    };
    tail_bound_at(td, &a, mode)
}
