//! Strip packing for rectangle batches, and composition of a packed strip
//! with an existing positioning.
//!
//! [`pack_strip`] is a next-fit shelf packer turned on its side: rectangles
//! are sorted by non-increasing width and stacked into vertical columns of a
//! prescribed height `a`.  The resulting strip width `b` is certified to
//! satisfy `b <= 2*S/a + w_max`, where `S` is the batch area and `w_max` the
//! widest input.  [`append_right`] then splices such a strip onto the right
//! edge of an existing positioning without changing its height.

mod error;
mod pack;

pub use error::ShelfError;
pub use pack::{append_right, pack_strip, ShelfPacking};
