use crate::family::{check_c2, CheckOutcome, Family, ProfileReport, Rounding};
use crate::FamilyError;
use packbound_core::{Rect, RectSet, Scalar};

/// The family with rectangle `i` of dimension `1/(i+1) x 1/i`.
///
/// Everything about it is exactly rational: areas telescope, so the total
/// area is 1 and the tail past `n` is `1/(n+1)`.  The squared-length tail
/// `R_n = sum_{i>n} 1/i^2` is irrational but sandwiched between `1/(n+1)`
/// and `1/n` by the integral test.
#[derive(Debug, Clone, Copy, Default)]
pub struct Harmonic;

impl Harmonic {
    fn side(i: usize) -> Rect {
        Rect::new(
            Scalar::ratio(1, i as i64 + 1),
            Scalar::ratio(1, i as i64),
        )
        .unwrap()
    }
}

impl Family for Harmonic {
    fn name(&self) -> String {
        "harmonic".into()
    }

    fn prefix(&self, n: usize, _rounding: Rounding) -> Result<RectSet, FamilyError> {
        if n == 0 {
            return Err(FamilyError::EmptyPrefix);
        }
        Ok(RectSet::new((1..=n).map(Harmonic::side).collect()))
    }

    fn s_total(&self) -> Result<(Scalar, Scalar), FamilyError> {
        Ok((Scalar::one(), Scalar::one()))
    }

    fn tail_area(&self, n: usize) -> Result<(Scalar, Scalar), FamilyError> {
        let exact = Scalar::ratio(1, n as i64 + 1);
        Ok((exact.clone(), exact))
    }

    fn tail_sq(&self, n: usize) -> Result<(Scalar, Scalar), FamilyError> {
        if n == 0 {
            // R_0 = zeta(2) = pi^2/6; use the crude but safe bracket [1, 2]
            return Ok((Scalar::one(), Scalar::from_int(2)));
        }
        Ok((Scalar::ratio(1, n as i64 + 1), Scalar::ratio(1, n as i64)))
    }

    fn l_next_upper(&self, n: usize) -> Result<Scalar, FamilyError> {
        Ok(Scalar::ratio(1, n as i64 + 1))
    }

    fn validate_profile(&self, prefix_len: usize) -> ProfileReport {
        let c2 = match self.prefix(prefix_len.max(1), Rounding::Down) {
            Ok(rects) => check_c2(&rects),
            Err(e) => CheckOutcome::Fail(e.to_string()),
        };
        ProfileReport {
            family: self.name(),
            c1: CheckOutcome::Pass,
            c2,
            notes: vec!["R_n < 1/n certifies C1".into()],
        }
    }
}
