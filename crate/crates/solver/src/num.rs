//! Integer abstraction for the search core.
//!
//! After rescaling by the common denominator all geometry is integral. Most
//! instances fit comfortably in `i128`; instances whose extent products
//! could approach the `i128` range (e.g. prefixes of power families with
//! huge denominators) run on `BigInt` instead. The search is generic over
//! this trait so both paths share one implementation.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub trait SolverInt: Clone + Ord + Send + Sync + std::fmt::Debug {
    fn zero() -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
    fn try_from_bigint(v: &BigInt) -> Option<Self>;
}

impl SolverInt for i128 {
    fn zero() -> Self {
        0
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn try_from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl SolverInt for BigInt {
    fn zero() -> Self {
        BigInt::from(0)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn try_from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}
