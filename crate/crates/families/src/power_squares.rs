use crate::enclosure::inverse_power_enclosure;
use crate::family::{check_c2, CheckOutcome, Family, ProfileReport, Rounding};
use crate::FamilyError;
use packbound_core::{Rect, RectSet, Scalar};

pub const DEFAULT_PRECISION_BITS: u32 = 64;

/// Partial-sum length used before switching to the integral-test bracket
/// when enclosing zeta-like totals.
const ZETA_SPLIT: u64 = 256;

/// Squares of side `i^(-t)` for a rational exponent `t`.
///
/// Squared sides sum like `sum i^(-2t)`, which converges exactly when
/// `t > 1/2`; generation therefore refuses smaller exponents.  The range
/// `1/2 < t <= 3/5` is the one for which a perfect packing is known, so
/// exponents above `3/5` only draw a profile note, not an error.  Sides are
/// dyadic enclosures with `precision_bits` fractional bits.
#[derive(Debug, Clone)]
pub struct PowerSquares {
    pub t: Scalar,
    pub precision_bits: u32,
    /// numerator and denominator of `t` as machine integers
    a: u64,
    b: u64,
}

impl PowerSquares {
    pub fn new(t: Scalar, precision_bits: u32) -> Result<Self, FamilyError> {
        if !t.is_positive() {
            return Err(FamilyError::InvalidField {
                family: "power_squares".into(),
                field: "t".into(),
                reason: format!("exponent must be positive, got {t}"),
            });
        }
        if precision_bits == 0 {
            return Err(FamilyError::PrecisionOverflow {
                reason: "precision_bits must be at least 1".into(),
            });
        }
        let a = u64::try_from(t.numer()).map_err(|_| FamilyError::InvalidField {
            family: "power_squares".into(),
            field: "t".into(),
            reason: "numerator does not fit in 64 bits".into(),
        })?;
        let b = u64::try_from(t.denom()).map_err(|_| FamilyError::InvalidField {
            family: "power_squares".into(),
            field: "t".into(),
            reason: "denominator does not fit in 64 bits".into(),
        })?;
        Ok(PowerSquares {
            t,
            precision_bits,
            a,
            b,
        })
    }

    fn c1_holds(&self) -> bool {
        // 2t > 1
        2 * self.a > self.b
    }

    fn require_c1(&self) -> Result<(), FamilyError> {
        if self.c1_holds() {
            Ok(())
        } else {
            Err(FamilyError::C1Violation {
                t: self.t.to_string(),
            })
        }
    }

    /// Enclosure of side `i^(-t)`.
    fn side(&self, i: u64) -> Result<(Scalar, Scalar), FamilyError> {
        inverse_power_enclosure(i, self.a, self.b, self.precision_bits)
    }

    /// Enclosure of `sum_{i > n} i^(-2t)` via the integral test:
    /// the tail lies in `[(n+1)^(1-2t), n^(1-2t)] / (2t - 1)`.
    fn zeta_tail(&self, n: u64) -> Result<(Scalar, Scalar), FamilyError> {
        self.require_c1()?;
        let c = 2 * self.a - self.b; // exponent of x^(1-2t) = x^(-c/b), c > 0
        let factor = Scalar::big_ratio(self.b.into(), c.into()).unwrap();
        let (lo, _) = inverse_power_enclosure(n + 1, c, self.b, self.precision_bits)?;
        let (_, hi) = inverse_power_enclosure(n, c, self.b, self.precision_bits)?;
        Ok((&lo * &factor, &hi * &factor))
    }

    /// Enclosure of `sum_{i > n} i^(-2t)`: exact partial terms up to the
    /// split point, integral bracket beyond it.
    fn square_tail(&self, n: u64) -> Result<(Scalar, Scalar), FamilyError> {
        self.require_c1()?;
        let split = (n + 1).max(ZETA_SPLIT);
        let mut lo = Scalar::zero();
        let mut hi = Scalar::zero();
        for i in n + 1..=split {
            let (term_lo, term_hi) = inverse_power_enclosure(i, 2 * self.a, self.b, self.precision_bits)?;
            lo = &lo + &term_lo;
            hi = &hi + &term_hi;
        }
        let (tail_lo, tail_hi) = self.zeta_tail(split)?;
        Ok((&lo + &tail_lo, &hi + &tail_hi))
    }
}

impl Family for PowerSquares {
    fn name(&self) -> String {
        format!("power_squares(t={})", self.t)
    }

    fn prefix(&self, n: usize, rounding: Rounding) -> Result<RectSet, FamilyError> {
        if n == 0 {
            return Err(FamilyError::EmptyPrefix);
        }
        self.require_c1()?;
        let mut rects = Vec::with_capacity(n);
        for i in 1..=n as u64 {
            let (lo, hi) = self.side(i)?;
            let side = match rounding {
                Rounding::Down => lo,
                Rounding::Up => hi,
            };
            rects.push(Rect::new(side.clone(), side)?);
        }
        Ok(RectSet::new(rects))
    }

    fn s_total(&self) -> Result<(Scalar, Scalar), FamilyError> {
        self.square_tail(0)
    }

    fn tail_area(&self, n: usize) -> Result<(Scalar, Scalar), FamilyError> {
        self.square_tail(n as u64)
    }

    fn tail_sq(&self, n: usize) -> Result<(Scalar, Scalar), FamilyError> {
        // squares: l_i^2 = w_i * l_i
        self.square_tail(n as u64)
    }

    fn l_next_upper(&self, n: usize) -> Result<Scalar, FamilyError> {
        Ok(self.side(n as u64 + 1)?.1)
    }

    fn validate_profile(&self, prefix_len: usize) -> ProfileReport {
        let c1 = if self.c1_holds() {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail(format!(
                "t = {} <= 1/2, so the squared sides diverge",
                self.t
            ))
        };
        let len = prefix_len.clamp(1, 512) as u64;
        let c2 = match (1..=len).map(|i| self.side(i)).collect::<Result<Vec<_>, _>>() {
            Ok(sides) => {
                // rounded-down sides inherit the true monotonicity
                let rects = RectSet::new(
                    sides
                        .into_iter()
                        .filter(|(lo, _)| lo.is_positive())
                        .map(|(lo, _)| Rect::new(lo.clone(), lo).unwrap())
                        .collect(),
                );
                check_c2(&rects)
            }
            Err(e) => CheckOutcome::Fail(e.to_string()),
        };
        let mut notes = vec![format!(
            "total via {ZETA_SPLIT} exact terms plus integral bracket"
        )];
        if self.t > Scalar::ratio(3, 5) {
            notes.push(format!(
                "t = {} is above 3/5, outside the range with a known perfect packing",
                self.t
            ));
        }
        ProfileReport {
            family: self.name(),
            c1,
            c2,
            notes,
        }
    }
}
