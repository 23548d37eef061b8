use crate::ShelfError;
use packbound_core::{Point, Positioning, RectSet, Scalar};
use serde::Serialize;

/// A batch of rectangles packed into a horizontal strip `[0, b] x [0, a]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShelfPacking {
    pub positioning: Positioning,
    /// Prescribed strip height `a`.
    pub strip_height: Scalar,
    /// Width `b` actually used, certified `b <= 2*S/a + w_max`.
    pub achieved_width: Scalar,
}

/// Packs `rects` into vertical columns of height at most `a`, columns
/// abutting left to right.
///
/// Rectangles are taken in order of non-increasing width (ties by index) and
/// stacked next-fit: a rectangle that no longer fits below height `a` starts
/// a new column whose width is that rectangle's own (and therefore the widest
/// in the column).  Every rectangle must satisfy `l <= a`.
pub fn pack_strip(rects: &RectSet, a: &Scalar) -> Result<ShelfPacking, ShelfError> {
    if !a.is_positive() {
        return Err(ShelfError::NonPositiveHeight {
            height: a.to_string(),
        });
    }
    for (i, r) in rects.rects.iter().enumerate() {
        if &r.l > a {
            return Err(ShelfError::TooTall {
                index: i,
                length: r.l.to_string(),
                height: a.to_string(),
            });
        }
    }

    let mut order: Vec<usize> = (0..rects.len()).collect();
    order.sort_by(|&i, &j| rects.rects[j].w.cmp(&rects.rects[i].w).then(i.cmp(&j)));

    let mut origins = vec![Point::of(0, 0); rects.len()];
    let mut col_x = Scalar::zero();
    let mut col_w = Scalar::zero();
    let mut col_y = Scalar::zero();
    for (k, &i) in order.iter().enumerate() {
        let r = &rects.rects[i];
        if k == 0 {
            col_w = r.w.clone();
        } else if &(&col_y + &r.l) > a {
            col_x = &col_x + &col_w;
            col_w = r.w.clone();
            col_y = Scalar::zero();
        }
        origins[i] = Point::new(col_x.clone(), col_y.clone());
        col_y = &col_y + &r.l;
    }
    let achieved_width = &col_x + &col_w;

    if !rects.is_empty() {
        // Next-fit guarantee: each column j >= 2 was opened because its first
        // rectangle overflowed column j-1, so pairing that rectangle's area
        // with column j-1's contents exceeds a * width(j); summing gives
        // width past the first column < 2*S/a.
        let s = rects.total_area()?;
        let bound = &(&(&Scalar::from_int(2) * &s) / a) + rects.max_width().as_ref().unwrap();
        assert!(
            achieved_width <= bound,
            "strip width {achieved_width} exceeds certified bound {bound}"
        );
    }

    Ok(ShelfPacking {
        positioning: Positioning::new(rects.clone(), origins)?,
        strip_height: a.clone(),
        achieved_width,
    })
}

/// Places `batch` immediately to the right of `base`: the strip's left edge
/// lands on the rightmost edge of `base` and its bottom on the base's lowest
/// edge.  Requires `batch.strip_height <= q(base)`, so the combined height is
/// unchanged and the combined width grows by exactly `batch.achieved_width`.
pub fn append_right(base: &Positioning, batch: &ShelfPacking) -> Result<Positioning, ShelfError> {
    if batch.positioning.is_empty() {
        return Ok(base.clone());
    }
    let m = base.measures()?;
    if batch.strip_height > m.q {
        return Err(ShelfError::ExceedsBase {
            height: batch.strip_height.to_string(),
            base_height: m.q.to_string(),
        });
    }
    let mut x_max = base.span(0).1;
    let mut y_min = base.span(0).2;
    for i in 1..base.len() {
        let (_, hi, lo_y, _) = base.span(i);
        x_max = x_max.max(hi);
        y_min = y_min.min(lo_y);
    }
    let shifted = batch.positioning.translated(&x_max, &y_min);

    let mut rects = base.set.rects.clone();
    rects.extend(shifted.set.rects.iter().cloned());
    let mut origins = base.origins.clone();
    origins.extend(shifted.origins.iter().cloned());
    Ok(Positioning::new(RectSet::new(rects), origins)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use packbound_core::Rect;

    fn ints(sides: &[(i64, i64)]) -> RectSet {
        RectSet::new(sides.iter().map(|&(w, l)| Rect::of(w, l)).collect())
    }

    #[test]
    fn one_square_fills_one_column() {
        let p = pack_strip(&ints(&[(1, 1)]), &Scalar::one()).unwrap();
        assert_eq!(p.achieved_width, Scalar::one());
        assert_eq!(p.positioning.origins, vec![Point::of(0, 0)]);
    }

    #[test]
    fn four_squares_make_two_columns() {
        let p = pack_strip(&ints(&[(1, 1), (1, 1), (1, 1), (1, 1)]), &Scalar::from_int(2)).unwrap();
        assert_eq!(p.achieved_width, Scalar::from_int(2));
        assert_eq!(
            p.positioning.origins,
            vec![
                Point::of(0, 0),
                Point::of(0, 1),
                Point::of(1, 0),
                Point::of(1, 1)
            ]
        );
        // certified bound 2*4/2 + 1 = 5 is loose but holds
        assert!(p.achieved_width <= Scalar::from_int(5));
    }

    #[test]
    fn widest_first_regardless_of_input_order() {
        // widths 1, 3, 2 -> packed as 3, 2, 1, each overflowing height 1
        let p = pack_strip(&ints(&[(1, 1), (3, 1), (2, 1)]), &Scalar::one()).unwrap();
        assert_eq!(p.achieved_width, Scalar::from_int(6));
        assert_eq!(
            p.positioning.origins,
            vec![Point::of(5, 0), Point::of(0, 0), Point::of(3, 0)]
        );
    }

    #[test]
    fn empty_batch_has_zero_width() {
        let p = pack_strip(&RectSet::default(), &Scalar::one()).unwrap();
        assert!(p.positioning.is_empty());
        assert_eq!(p.achieved_width, Scalar::zero());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            pack_strip(&ints(&[(1, 1)]), &Scalar::zero()),
            Err(ShelfError::NonPositiveHeight { .. })
        ));
        assert!(matches!(
            pack_strip(&ints(&[(1, 1), (1, 3)]), &Scalar::from_int(2)),
            Err(ShelfError::TooTall { index: 1, .. })
        ));
    }

    #[test]
    fn append_places_side_by_side() {
        let base = Positioning::new(ints(&[(1, 1)]), vec![Point::of(0, 0)]).unwrap();
        let batch = pack_strip(&ints(&[(1, 1)]), &Scalar::one()).unwrap();
        let combined = append_right(&base, &batch).unwrap();
        assert_eq!(combined.origins, vec![Point::of(0, 0), Point::of(1, 0)]);
        assert_eq!(combined.measures().unwrap().t, Scalar::from_int(2));
    }

    #[test]
    fn append_empty_batch_is_identity() {
        let base = Positioning::new(ints(&[(2, 3)]), vec![Point::of(4, 5)]).unwrap();
        let batch = pack_strip(&RectSet::default(), &Scalar::one()).unwrap();
        assert_eq!(append_right(&base, &batch).unwrap(), base);
    }

    #[test]
    fn append_rejects_tall_strips() {
        let base = Positioning::new(ints(&[(1, 1)]), vec![Point::of(0, 0)]).unwrap();
        let batch = pack_strip(&ints(&[(1, 2)]), &Scalar::from_int(2)).unwrap();
        assert!(matches!(
            append_right(&base, &batch),
            Err(ShelfError::ExceedsBase { .. })
        ));
    }

    #[test]
    fn packing_serializes() {
        let p = pack_strip(&ints(&[(1, 1)]), &Scalar::one()).unwrap();
        let json = serde_json::to_value(&p).unwrap();
        assert_eq!(json["achieved_width"], "1");
        assert_eq!(json["strip_height"], "1");
        assert_eq!(json["positioning"]["origins"][0]["x"], "0");
    }
}
