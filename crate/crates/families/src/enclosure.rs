use crate::FamilyError;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use packbound_core::Scalar;

/// Largest total bit size we are willing to feed the integer root below.
const MAX_ROOT_BITS: u64 = 1 << 21;

/// Two-sided dyadic enclosure of `i^(-c/d)`.
///
/// Returns `(lo, hi)` with `lo <= i^(-c/d) <= hi`, both with denominator
/// `2^bits`.  When the power is exactly dyadic the enclosure collapses to a
/// point.  Soundness: `lo = y / 2^bits` for the largest integer `y` with
/// `y^d * i^c <= 2^(d*bits)`, which is equivalent to `lo^d <= i^(-c)`.
pub(crate) fn inverse_power_enclosure(
    i: u64,
    c: u64,
    d: u64,
    bits: u32,
) -> Result<(Scalar, Scalar), FamilyError> {
    debug_assert!(i >= 1 && c >= 1 && d >= 1);
    let root = u32::try_from(d).map_err(|_| FamilyError::PrecisionOverflow {
        reason: format!("exponent denominator {d} is too large"),
    })?;
    let exp = u32::try_from(c).map_err(|_| FamilyError::PrecisionOverflow {
        reason: format!("exponent numerator {c} is too large"),
    })?;
    let total_bits = d * u64::from(bits);
    if total_bits > MAX_ROOT_BITS {
        return Err(FamilyError::PrecisionOverflow {
            reason: format!(
                "denominator {d} at {bits} bits needs a {total_bits}-bit root (max {MAX_ROOT_BITS})"
            ),
        });
    }

    let base = BigUint::from(i).pow(exp);
    let scale = BigUint::one() << usize::try_from(total_bits).unwrap();
    let y = (&scale / &base).nth_root(root);
    let exact = y.pow(root) * &base == scale;

    let denom = BigInt::one() << bits as usize;
    let lo = Scalar::big_ratio(BigInt::from(y.clone()), denom.clone()).unwrap();
    let hi = if exact {
        lo.clone()
    } else {
        Scalar::big_ratio(BigInt::from(y + BigUint::one()), denom).unwrap()
    };
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_powers_collapse() {
        // 4^(-1/2) = 1/2 exactly
        let (lo, hi) = inverse_power_enclosure(4, 1, 2, 16).unwrap();
        assert_eq!(lo, Scalar::ratio(1, 2));
        assert_eq!(lo, hi);
        // 1^(-anything) = 1
        let (lo, hi) = inverse_power_enclosure(1, 3, 5, 64).unwrap();
        assert_eq!(lo, Scalar::one());
        assert_eq!(hi, Scalar::one());
    }

    #[test]
    fn brackets_the_true_value() {
        // 2^(-3/5): verify lo^5 <= 2^-3 <= hi^5 exactly
        let (lo, hi) = inverse_power_enclosure(2, 3, 5, 48).unwrap();
        assert!(lo < hi);
        let fifth = |s: &Scalar| s * &(s * &(s * &(s * s)));
        assert!(fifth(&lo) <= Scalar::ratio(1, 8));
        assert!(fifth(&hi) >= Scalar::ratio(1, 8));
        // interval has width exactly 2^-48
        assert_eq!(&hi - &lo, Scalar::big_ratio(1.into(), (1i64 << 48).into()).unwrap());
    }

    #[test]
    fn rejects_absurd_precision() {
        assert!(matches!(
            inverse_power_enclosure(2, 1, 1 << 16, 1 << 10),
            Err(FamilyError::PrecisionOverflow { .. })
        ));
    }
}
