//! The transform functions.
//!
//! All x-variants are implemented directly; y-variants go through
//! [`transpose`], which swaps the axes (w <-> l, x <-> y) and is its own
//! inverse. Transforms never re-order rectangles.

use packbound_core::{Point, Positioning, Rect, RectSet, Scalar};

use crate::error::TransformError;

fn check_index(p: &Positioning, i: usize) -> Result<(), TransformError> {
    if i >= p.len() {
        return Err(TransformError::IndexOutOfRange {
            index: i,
            len: p.len(),
        });
    }
    Ok(())
}

/// Swap the axes of a positioning: widths become lengths and x-origins
/// become y-origins. Involution; validity is preserved.
pub fn transpose(p: &Positioning) -> Positioning {
    let rects = p
        .set
        .rects
        .iter()
        .map(|r| Rect {
            w: r.l.clone(),
            l: r.w.clone(),
        })
        .collect();
    let origins = p
        .origins
        .iter()
        .map(|o| Point::new(o.y.clone(), o.x.clone()))
        .collect();
    Positioning {
        set: RectSet::new(rects),
        origins,
    }
}

/// Shrink the width of rectangle `i` by `dx`, keeping its origin.
/// Requires `0 < dx < w_i`; never increases the bounding area.
pub fn retract_x(p: &Positioning, i: usize, dx: &Scalar) -> Result<Positioning, TransformError> {
    check_index(p, i)?;
    let w = &p.set.rects[i].w;
    if !dx.is_positive() || dx >= w {
        return Err(TransformError::RetractOutOfRange {
            dx: dx.to_string(),
            side: w.to_string(),
        });
    }
    let mut out = p.clone();
    out.set.rects[i].w = w - dx;
    Ok(out)
}

pub fn retract_y(p: &Positioning, i: usize, dy: &Scalar) -> Result<Positioning, TransformError> {
    Ok(transpose(&retract_x(&transpose(p), i, dy)?))
}

/// Grow the width of rectangle `i` by `dx > 0`. Every rectangle whose left
/// edge sits at or beyond the old right edge of `i` shifts right by `dx`;
/// everything else stays. The result is valid and its bounding area grows
/// by at most `q(P) * dx`.
pub fn extend_x(p: &Positioning, i: usize, dx: &Scalar) -> Result<Positioning, TransformError> {
    check_index(p, i)?;
    if !dx.is_positive() {
        return Err(TransformError::NonPositiveExtension {
            value: dx.to_string(),
        });
    }
    let old_right = &p.origins[i].x + &p.set.rects[i].w;
    let mut out = p.clone();
    out.set.rects[i].w = &p.set.rects[i].w + dx;
    for (k, origin) in out.origins.iter_mut().enumerate() {
        if k != i && origin.x >= old_right {
            origin.x = &origin.x + dx;
        }
    }
    Ok(out)
}

pub fn extend_y(p: &Positioning, i: usize, dy: &Scalar) -> Result<Positioning, TransformError> {
    Ok(transpose(&extend_x(&transpose(p), i, dy)?))
}

/// Extend the width and then the length of the same rectangle. The bounding
/// area grows by at most `q*dx + p*dy + dx*dy` (measured on the input).
pub fn extend_xy(
    p: &Positioning,
    i: usize,
    dx: &Scalar,
    dy: &Scalar,
) -> Result<Positioning, TransformError> {
    extend_y(&extend_x(p, i, dx)?, i, dy)
}

/// Remove the gaps of the x-projection: every maximal interval strictly
/// inside the x-span that no rectangle's projection covers is squeezed out
/// by shifting all rectangles to its right left by the gap width. y-origins
/// are untouched, so `q` is preserved, and afterwards `p <= sum(w_i)`.
pub fn squeeze_x(p: &Positioning) -> Positioning {
    if p.len() < 2 {
        return p.clone();
    }
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p.origins[a].x.cmp(&p.origins[b].x).then(a.cmp(&b)));

    let mut shifts = vec![Scalar::zero(); p.len()];
    let mut cover_end = p.origins[order[0]].x.clone();
    let mut gap_sum = Scalar::zero();
    for &idx in &order {
        let left = &p.origins[idx].x;
        if *left > cover_end {
            gap_sum = &gap_sum + &(left - &cover_end);
            cover_end = left.clone();
        }
        shifts[idx] = gap_sum.clone();
        let right = left + &p.set.rects[idx].w;
        if right > cover_end {
            cover_end = right;
        }
    }

    let origins = p
        .origins
        .iter()
        .zip(&shifts)
        .map(|(o, s)| Point::new(&o.x - s, o.y.clone()))
        .collect();
    Positioning {
        set: p.set.clone(),
        origins,
    }
}

pub fn squeeze_y(p: &Positioning) -> Positioning {
    transpose(&squeeze_x(&transpose(p)))
}

/// Keep the first `n` rectangles (with their coordinates) and drop the rest.
pub fn remove_tail(p: &Positioning, n: usize) -> Result<Positioning, TransformError> {
    if n == 0 || n > p.len() {
        return Err(TransformError::CountOutOfRange { n, len: p.len() });
    }
    Ok(Positioning {
        set: RectSet::new(p.set.rects[..n].to_vec()),
        origins: p.origins[..n].to_vec(),
    })
}

/// Multiply all sides by `c > 0`. `T` scales by `c^2`, `eta` is unchanged.
pub fn scale_set(set: &RectSet, c: &Scalar) -> Result<RectSet, TransformError> {
    if !c.is_positive() {
        return Err(TransformError::NonPositiveFactor {
            value: c.to_string(),
        });
    }
    let rects = set
        .rects
        .iter()
        .map(|r| Rect {
            w: &r.w * c,
            l: &r.l * c,
        })
        .collect();
    Ok(RectSet::new(rects))
}

/// Multiply all sides and coordinates by `c > 0`.
pub fn scale_positioning(p: &Positioning, c: &Scalar) -> Result<Positioning, TransformError> {
    let set = scale_set(&p.set, c)?;
    let origins = p
        .origins
        .iter()
        .map(|o| Point::new(&o.x * c, &o.y * c))
        .collect();
    Ok(Positioning { set, origins })
}

#[cfg(test)]
mod tests {
    use super::*;
    use packbound_core::Scalar;

    fn sc(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn pos(rects: Vec<(i64, i64)>, origins: Vec<(i64, i64)>) -> Positioning {
        Positioning::new(
            RectSet::new(rects.into_iter().map(|(w, l)| Rect::of(w, l)).collect()),
            origins.into_iter().map(|(x, y)| Point::of(x, y)).collect(),
        )
        .unwrap()
    }

    fn t_of(p: &Positioning) -> Scalar {
        p.measures().unwrap().t
    }

    #[test]
    fn retract_single_rect() {
        let p = pos(vec![(2, 1)], vec![(0, 0)]);
        let out = retract_x(&p, 0, &sc("1/2")).unwrap();
        assert_eq!(out.set.rects[0].w, sc("3/2"));
        assert_eq!(t_of(&out), sc("3/2"));
        assert!(out.is_valid());
    }

    #[test]
    fn retract_held_by_other_rect() {
        // Bounding box held by square 1, so T stays 2.
        let p = pos(vec![(1, 1), (1, 1)], vec![(0, 0), (1, 0)]);
        let out = retract_x(&p, 0, &sc("1/2")).unwrap();
        assert_eq!(t_of(&out), Scalar::from_int(2));
    }

    #[test]
    fn retract_rejects_out_of_range() {
        let p = pos(vec![(2, 1)], vec![(0, 0)]);
        assert!(retract_x(&p, 0, &sc("0")).is_err());
        assert!(retract_x(&p, 0, &sc("2")).is_err());
        assert!(retract_x(&p, 0, &sc("5/2")).is_err());
        assert!(retract_x(&p, 1, &sc("1/2")).is_err());
    }

    #[test]
    fn extend_single_rect_bound_tight() {
        let p = pos(vec![(1, 1)], vec![(0, 0)]);
        let out = extend_x(&p, 0, &Scalar::one()).unwrap();
        assert_eq!(out.set.rects[0].w, Scalar::from_int(2));
        assert_eq!(t_of(&out), Scalar::from_int(2)); // = 1 + q*dx = 1 + 1
    }

    #[test]
    fn extend_shifts_rectangles_to_the_right() {
        let p = pos(vec![(1, 1), (1, 1)], vec![(0, 0), (1, 0)]);
        let out = extend_x(&p, 0, &sc("1/2")).unwrap();
        assert_eq!(out.origins[1].x, sc("3/2"));
        assert!(out.is_valid());
        assert_eq!(t_of(&out), sc("5/2"));
        // bound: T + q*dx = 2 + 1/2
        assert!(t_of(&out) <= sc("5/2"));
    }

    #[test]
    fn extend_xy_single_rect_bound_tight() {
        let p = pos(vec![(1, 1)], vec![(0, 0)]);
        let out = extend_xy(&p, 0, &Scalar::one(), &Scalar::one()).unwrap();
        assert_eq!(t_of(&out), Scalar::from_int(4)); // 1 + 1 + 1 + 1
    }

    #[test]
    fn extend_xy_stacked_squares() {
        // Two stacked unit squares, grow the lower one by (1/2, 1/2).
        let p = pos(vec![(1, 1), (1, 1)], vec![(0, 0), (0, 1)]);
        let before = p.measures().unwrap();
        let out = extend_xy(&p, 0, &sc("1/2"), &sc("1/2")).unwrap();
        assert!(out.is_valid());
        let bound = &before.t
            + &(&before.q * &sc("1/2"))
            + &(&before.p * &sc("1/2"))
            + &(&sc("1/2") * &sc("1/2"));
        assert_eq!(bound, sc("15/4")); // 2 + 1 + 1/2 + 1/4
        let t_after = t_of(&out);
        assert!(t_after <= bound, "T {t_after:?} exceeds bound {bound:?}");
        // exact value: square 1 shifted up to y=3/2; box 3/2 x 5/2
        assert_eq!(t_after, sc("15/4"));
    }

    #[test]
    fn squeeze_removes_gaps() {
        let p = pos(vec![(1, 1), (1, 1)], vec![(0, 0), (2, 0)]);
        let out = squeeze_x(&p);
        assert_eq!(out.origins[1].x, Scalar::one());
        assert_eq!(out.measures().unwrap().p, Scalar::from_int(2));
        assert!(out.is_valid());
    }

    #[test]
    fn squeeze_identity_when_gap_free() {
        let p = pos(vec![(1, 2), (1, 1)], vec![(0, 0), (1, 5)]);
        // x-projections [0,1] and [1,2] touch: no gap.
        let out = squeeze_x(&p);
        assert_eq!(out, p);
    }

    #[test]
    fn squeeze_handles_nested_projections() {
        // Rect 1's projection sits inside rect 0's; gap before rect 2.
        let p = pos(
            vec![(4, 1), (1, 1), (1, 1)],
            vec![(0, 0), (1, 2), (6, 0)],
        );
        let out = squeeze_x(&p);
        assert_eq!(out.origins[2].x, Scalar::from_int(4));
        assert_eq!(out.origins[1].x, Scalar::one());
        assert!(out.is_valid());
        assert!(out.measures().unwrap().p <= p.set.sum_widths());
    }

    #[test]
    fn remove_tail_basics() {
        let p = pos(vec![(1, 1), (1, 1)], vec![(0, 0), (3, 3)]);
        assert_eq!(remove_tail(&p, 2).unwrap(), p);
        let first = remove_tail(&p, 1).unwrap();
        assert_eq!(first.len(), 1);
        assert_eq!(t_of(&first), Scalar::one());
        assert!(remove_tail(&p, 0).is_err());
        assert!(remove_tail(&p, 3).is_err());
    }

    #[test]
    fn scale_preserves_eta() {
        let p = pos(vec![(1, 1), (2, 1)], vec![(0, 0), (1, 0)]);
        let out = scale_positioning(&p, &Scalar::from_int(3)).unwrap();
        assert_eq!(out.measures().unwrap().t, Scalar::from_int(27));
        assert_eq!(out.measures().unwrap().eta, p.measures().unwrap().eta);
        assert_eq!(
            scale_positioning(&p, &Scalar::one()).unwrap(),
            p
        );
        assert!(scale_positioning(&p, &Scalar::zero()).is_err());
        assert!(scale_set(&p.set, &sc("-2")).is_err());
    }

    #[test]
    fn transpose_is_involution() {
        let p = pos(vec![(1, 2), (3, 4)], vec![(0, 0), (1, 5)]);
        assert_eq!(transpose(&transpose(&p)), p);
        let m = p.measures().unwrap();
        let mt = transpose(&p).measures().unwrap();
        assert_eq!(m.p, mt.q);
        assert_eq!(m.t, mt.t);
    }
}
