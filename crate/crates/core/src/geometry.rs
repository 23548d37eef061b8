//! Rectangles, rectangle sets, and positionings.
//!
//! A positioning places each rectangle of a set by its lower-left corner;
//! rectangles keep their orientation (no rotation). Validity means pairwise
//! interior-disjointness — touching edges are allowed. The bounding measures
//! `p` (x-extent), `q` (y-extent), `t = p*q`, and `eta = area/t` are computed
//! exactly.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::scalar::Scalar;

/// Fixed-orientation rectangle: width `w` (x side) and length `l` (y side).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRect")]
pub struct Rect {
    pub w: Scalar,
    pub l: Scalar,
}

#[derive(Deserialize)]
struct RawRect {
    w: Scalar,
    l: Scalar,
}

impl TryFrom<RawRect> for Rect {
    type Error = CoreError;
    fn try_from(raw: RawRect) -> Result<Self, CoreError> {
        Rect::new(raw.w, raw.l)
    }
}

impl Rect {
    pub fn new(w: Scalar, l: Scalar) -> Result<Self, CoreError> {
        if !w.is_positive() || !l.is_positive() {
            return Err(CoreError::NonPositiveSide { index: 0 });
        }
        Ok(Rect { w, l })
    }

    /// Convenience constructor from integer sides; panics on nonpositive input.
    pub fn of(w: i64, l: i64) -> Self {
        Rect::new(Scalar::from_int(w), Scalar::from_int(l)).expect("positive sides")
    }

    pub fn area(&self) -> Scalar {
        &self.w * &self.l
    }
}

/// Ordered collection of rectangles. May be empty as a value; most
/// operations on an empty set report [`CoreError::EmptySet`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct RectSet {
    pub rects: Vec<Rect>,
}

impl RectSet {
    pub fn new(rects: Vec<Rect>) -> Self {
        RectSet { rects }
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    /// Exact total area `S = sum(w_i * l_i)`.
    pub fn total_area(&self) -> Result<Scalar, CoreError> {
        if self.is_empty() {
            return Err(CoreError::EmptySet);
        }
        Ok(self.rects.iter().map(Rect::area).sum())
    }

    pub fn sum_widths(&self) -> Scalar {
        self.rects.iter().map(|r| r.w.clone()).sum()
    }

    pub fn sum_lengths(&self) -> Scalar {
        self.rects.iter().map(|r| r.l.clone()).sum()
    }

    pub fn max_width(&self) -> Option<Scalar> {
        self.rects.iter().map(|r| r.w.clone()).max()
    }

    pub fn max_length(&self) -> Option<Scalar> {
        self.rects.iter().map(|r| r.l.clone()).max()
    }
}

/// Lower-left corner of a placed rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn of(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }
}

/// Bounding measures of a positioning: extents `p` and `q`, bounding area
/// `t = p*q`, and packing efficiency `eta = total_area / t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Measures {
    pub p: Scalar,
    pub q: Scalar,
    pub t: Scalar,
    pub eta: Scalar,
}

/// A rectangle set together with one lower-left origin per rectangle.
///
/// Construction only enforces the structural invariant (matching lengths);
/// interior-disjointness is a separate diagnostic via [`Positioning::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPositioning")]
pub struct Positioning {
    #[serde(flatten)]
    pub set: RectSet,
    pub origins: Vec<Point>,
}

#[derive(Deserialize)]
struct RawPositioning {
    rects: Vec<Rect>,
    origins: Vec<Point>,
}

impl TryFrom<RawPositioning> for Positioning {
    type Error = CoreError;
    fn try_from(raw: RawPositioning) -> Result<Self, CoreError> {
        Positioning::new(RectSet::new(raw.rects), raw.origins)
    }
}

/// Violation found by [`Positioning::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Open interiors of rectangles `first` and `second` intersect.
    Overlap { first: usize, second: usize },
    /// Rectangle `index` has a nonpositive width or length.
    NonPositiveSide { index: usize },
    /// Number of origins differs from number of rectangles.
    OriginCountMismatch { rects: usize, origins: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Overlap { first, second } => {
                write!(f, "rectangles {first} and {second} overlap")
            }
            Violation::NonPositiveSide { index } => {
                write!(f, "rectangle {index} has a nonpositive side")
            }
            Violation::OriginCountMismatch { rects, origins } => {
                write!(f, "{rects} rectangles but {origins} origins")
            }
        }
    }
}

impl Positioning {
    pub fn new(set: RectSet, origins: Vec<Point>) -> Result<Self, CoreError> {
        if set.len() != origins.len() {
            return Err(CoreError::OriginCountMismatch {
                rects: set.len(),
                origins: origins.len(),
            });
        }
        Ok(Positioning { set, origins })
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// `(x-, x+, y-, y+)` span of rectangle `i`.
    pub fn span(&self, i: usize) -> (Scalar, Scalar, Scalar, Scalar) {
        let o = &self.origins[i];
        let r = &self.set.rects[i];
        (
            o.x.clone(),
            &o.x + &r.w,
            o.y.clone(),
            &o.y + &r.l,
        )
    }

    /// Exact bounding measures. Errors on an empty positioning.
    pub fn measures(&self) -> Result<Measures, CoreError> {
        if self.is_empty() {
            return Err(CoreError::EmptySet);
        }
        let (mut min_x, mut max_x, mut min_y, mut max_y) = self.span(0);
        for i in 1..self.len() {
            let (x0, x1, y0, y1) = self.span(i);
            if x0 < min_x {
                min_x = x0;
            }
            if x1 > max_x {
                max_x = x1;
            }
            if y0 < min_y {
                min_y = y0;
            }
            if y1 > max_y {
                max_y = y1;
            }
        }
        let p = max_x - min_x;
        let q = max_y - min_y;
        let t = &p * &q;
        let eta = &self.set.total_area()? / &t;
        Ok(Measures { p, q, t, eta })
    }

    /// Reports every violation: each overlapping pair (open interiors),
    /// each nonpositive side, and any rect/origin count mismatch.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.set.len() != self.origins.len() {
            out.push(Violation::OriginCountMismatch {
                rects: self.set.len(),
                origins: self.origins.len(),
            });
            return out;
        }
        for (i, r) in self.set.rects.iter().enumerate() {
            if !r.w.is_positive() || !r.l.is_positive() {
                out.push(Violation::NonPositiveSide { index: i });
            }
        }
        let n = self.len();
        for i in 0..n {
            let (ix0, ix1, iy0, iy1) = self.span(i);
            for j in (i + 1)..n {
                let (jx0, jx1, jy0, jy1) = self.span(j);
                let x_sep = ix1 <= jx0 || jx1 <= ix0;
                let y_sep = iy1 <= jy0 || jy1 <= iy0;
                if !x_sep && !y_sep {
                    out.push(Violation::Overlap { first: i, second: j });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn translated(&self, dx: &Scalar, dy: &Scalar) -> Positioning {
        let origins = self
            .origins
            .iter()
            .map(|o| Point::new(&o.x + dx, &o.y + dy))
            .collect();
        Positioning {
            set: self.set.clone(),
            origins,
        }
    }

    /// Translates so the bounding box's lower-left corner sits at the origin.
    pub fn normalized(&self) -> Positioning {
        if self.is_empty() {
            return self.clone();
        }
        let min_x = self.origins.iter().map(|o| o.x.clone()).min().unwrap();
        let min_y = self.origins.iter().map(|o| o.y.clone()).min().unwrap();
        self.translated(&-&min_x, &-&min_y)
    }
}
