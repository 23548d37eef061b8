//! Arbitrary-precision rational scalar.
//!
//! All geometry in this workspace is exact: coordinates, side lengths, areas
//! and bounds are rationals, never floats. `Scalar` is a thin newtype over
//! [`num_rational::BigRational`] that fixes the textual formats used across
//! the JSON interfaces ("p/q", decimal, or integer strings) and provides the
//! few numeric extras the bound calculus needs (exact decimal rendering and
//! directed square-root enclosures).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CoreError;

/// Exact rational number (arbitrary precision, always in reduced form).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Scalar(BigRational::from_integer(v))
    }

    /// `p/q` from machine integers. Panics if `q == 0`; use [`Scalar::big_ratio`]
    /// when the denominator is not statically known to be nonzero.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "Scalar::ratio with zero denominator");
        Scalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn big_ratio(num: BigInt, den: BigInt) -> Result<Self, CoreError> {
        if den.is_zero() {
            return Err(CoreError::ZeroDenominator);
        }
        Ok(Scalar(BigRational::new(num, den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(r)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Renders the exact value as a decimal string with `sig` significant
    /// digits (round half to even), trimming trailing fractional zeros.
    /// Values that need more than `sig` digits are rounded, so the printed
    /// string always agrees with the exact value to the printed precision.
    pub fn decimal(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.0.is_zero() {
            return "0".to_string();
        }
        let neg = self.0.is_negative();
        let num = self.0.numer().magnitude().clone();
        let den = self.0.denom().magnitude().clone();

        let int_part = &num / &den;
        let body = if !int_part.is_zero() {
            let int_len = int_part.to_string().len();
            if int_len >= sig {
                // Rounding position sits inside the integer part.
                let unit = BigUint::from(10u32).pow((int_len - sig) as u32);
                let rounded = round_half_even(&num, &(&den * &unit));
                (rounded * unit).to_string()
            } else {
                let places = sig - int_len;
                let scaled = &num * BigUint::from(10u32).pow(places as u32);
                let rounded = round_half_even(&scaled, &den);
                format_scaled(&rounded, places)
            }
        } else {
            // Pure fraction: locate the first significant digit.
            let mut leading_zeros = 0usize;
            let mut probe = &num * BigUint::from(10u32);
            while probe < den {
                leading_zeros += 1;
                probe *= BigUint::from(10u32);
            }
            let places = leading_zeros + sig;
            let scaled = &num * BigUint::from(10u32).pow(places as u32);
            let rounded = round_half_even(&scaled, &den);
            format_scaled(&rounded, places)
        };
        if neg && body != "0" {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Directed enclosure `lo <= sqrt(self) <= hi` with `hi - lo` at most
    /// `1 / (denom * 2^bits)`. Returns `lo == hi` when the root is exact.
    pub fn sqrt_enclosure(&self, bits: u32) -> Result<(Scalar, Scalar), CoreError> {
        if self.is_negative() {
            return Err(CoreError::NegativeSqrt);
        }
        if self.is_zero() {
            return Ok((Scalar::zero(), Scalar::zero()));
        }
        // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits so the integer square
        // root carries `bits` extra binary digits.
        let n = self.0.numer().magnitude();
        let d = self.0.denom().magnitude();
        let scaled = n * d << (2 * bits as usize);
        let root = scaled.sqrt();
        let exact = &root * &root == scaled;
        let denom = BigInt::from(d << (bits as usize));
        let lo = Scalar(BigRational::new(BigInt::from(root.clone()), denom.clone()));
        let hi = if exact {
            lo.clone()
        } else {
            Scalar(BigRational::new(BigInt::from(root + 1u32), denom))
        };
        Ok((lo, hi))
    }
}

/// Round `num/den` to the nearest integer, ties to even.
fn round_half_even(num: &BigUint, den: &BigUint) -> BigUint {
    let q = num / den;
    let r = num - &q * den;
    let twice = &r * 2u32;
    if twice > *den || (twice == *den && (&q % 2u32) == BigUint::one()) {
        q + 1u32
    } else {
        q
    }
}

/// Formats `value / 10^places` as a decimal string, trimming trailing zeros.
fn format_scaled(value: &BigUint, places: usize) -> String {
    let digits = value.to_string();
    let mut s = if places == 0 {
        digits
    } else if digits.len() <= places {
        format!("0.{}{}", "0".repeat(places - digits.len()), digits)
    } else {
        let split = digits.len() - places;
        format!("{}.{}", &digits[..split], &digits[split..])
    };
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "0.0" || s.is_empty() {
        s = "0".to_string();
    }
    s
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = CoreError;

    /// Accepts `"p/q"`, decimal (`"3.25"`, `"-.5"`), or integer strings.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let raw = s.trim();
        let err = |reason: &str| CoreError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if raw.is_empty() {
            return Err(err("empty string"));
        }
        if let Some((num, den)) = raw.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|e| err(&format!("numerator: {e}")))?;
            let d = BigInt::from_str(den.trim()).map_err(|e| err(&format!("denominator: {e}")))?;
            if d.is_zero() {
                return Err(CoreError::ZeroDenominator);
            }
            return Ok(Scalar(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = raw.split_once('.') {
            let (sign, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            if !int_digits.chars().all(|c| c.is_ascii_digit())
                || !frac_part.chars().all(|c| c.is_ascii_digit())
            {
                return Err(err("expected decimal digits"));
            }
            if int_digits.is_empty() && frac_part.is_empty() {
                return Err(err("no digits"));
            }
            let int_val = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(int_digits).map_err(|e| err(&format!("{e}")))?
            };
            let frac_val = if frac_part.is_empty() {
                BigRational::zero()
            } else {
                let f = BigInt::from_str(frac_part).map_err(|e| err(&format!("{e}")))?;
                BigRational::new(f, BigInt::from(10u32).pow(frac_part.len() as u32))
            };
            let magnitude = BigRational::from_integer(int_val) + frac_val;
            return Ok(Scalar(magnitude * BigInt::from(sign)));
        }
        let n = BigInt::from_str(raw).map_err(|e| err(&format!("{e}")))?;
        Ok(Scalar(BigRational::from_integer(n)))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as a string (\"p/q\", decimal, or integer) or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
                v.parse().map_err(de::Error::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
                Ok(Scalar::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
                Ok(Scalar(BigRational::from_integer(BigInt::from(v))))
            }
        }
        deserializer.deserialize_any(V)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "Scalar division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "Scalar division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}
