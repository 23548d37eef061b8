//! Rectangle family generators: the harmonic family, power-law squares, and
//! finite custom lists.
//!
//! Each family produces exact or directionally rounded rational data: finite
//! prefixes of the sequence, two-sided enclosures of the total area, and
//! upper/lower bounds for tail quantities.  Irrational sides are never
//! represented as floats; they become dyadic rational enclosures whose
//! precision is a parameter.  The profile checks certify the two structural
//! conditions the bound calculus relies on: the sum of squared lengths
//! converges (C1), and no rectangle is wider than it is long with lengths
//! never increasing along the sequence (C2).

mod custom;
mod enclosure;
mod error;
mod family;
mod harmonic;
mod power_squares;
mod registry;

pub use custom::Custom;
pub use error::FamilyError;
pub use family::{CheckOutcome, Family, ProfileReport, Rounding};
pub use harmonic::Harmonic;
pub use power_squares::{PowerSquares, DEFAULT_PRECISION_BITS};
pub use registry::{FamilyBuilder, FamilyRegistry};
