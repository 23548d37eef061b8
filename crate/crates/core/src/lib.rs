//! Exact-rational primitives for axis-parallel rectangle packing.
//!
//! Everything downstream (transforms, solvers, certified bounds) is built on
//! the types in this crate: [`Scalar`] wraps an arbitrary-precision rational,
//! [`Rect`] / [`RectSet`] describe fixed-orientation rectangles, and
//! [`Positioning`] pairs a set with lower-left origins so that bounding
//! measures can be evaluated without any floating-point rounding.

pub mod error;
pub mod geometry;
pub mod scalar;

pub use error::CoreError;
pub use geometry::{Measures, Point, Positioning, Rect, RectSet, Violation};
pub use scalar::Scalar;
