//! Constructive manipulations of positionings.
//!
//! Each transform is a pure function from a valid positioning to a new one,
//! with an exact a-priori bound on how the bounding area can change:
//! retraction and squeeze never increase `T`, extension increases it by at
//! most `q*dx` (resp. `p*dy`), and scaling leaves the efficiency `eta`
//! untouched. The [`registry`] module exposes the same operations behind a
//! name-keyed [`registry::TransformOp`] table so callers (e.g. the CLI) can
//! dispatch on strings and receive the certified bound alongside the result.

pub mod error;
pub mod ops;
pub mod perturbation;
pub mod registry;

pub use error::TransformError;
pub use ops::{
    extend_x, extend_xy, extend_y, remove_tail, retract_x, retract_y, scale_positioning,
    scale_set, squeeze_x, squeeze_y, transpose,
};
pub use perturbation::{Delta, Perturbation};
pub use registry::{Applied, CertifiedBound, OpRequest, TransformOp, TransformRegistry};
