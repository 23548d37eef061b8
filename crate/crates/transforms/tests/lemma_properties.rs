//! Property tests for the transform inequalities.
//!
//! Random valid positionings are built row by row (nonnegative gaps between
//! rectangles and rows), which is valid by construction and still exercises
//! touching edges, nested projections, and rational coordinates.

use packbound_core::{Point, Positioning, Rect, RectSet, Scalar};
use packbound_transforms as tx;
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct RawLayout {
    sides: Vec<(u8, u8, u8, u8)>, // (w_num, w_den, l_num, l_den)
    gaps: Vec<(u8, u8)>,
    breaks: Vec<bool>,
}

fn raw_layout(max_n: usize) -> impl Strategy<Value = RawLayout> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec((1u8..8, 1u8..5, 1u8..8, 1u8..5), n),
            proptest::collection::vec((0u8..4, 0u8..3), n),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(sides, gaps, breaks)| RawLayout {
                sides,
                gaps,
                breaks,
            })
    })
}

fn build(raw: &RawLayout) -> Positioning {
    let mut rects = Vec::new();
    let mut origins = Vec::new();
    let mut x = Scalar::zero();
    let mut y = Scalar::zero();
    let mut row_height = Scalar::zero();
    for (i, (wn, wd, ln, ld)) in raw.sides.iter().enumerate() {
        let rect = Rect::new(
            Scalar::ratio(*wn as i64, *wd as i64),
            Scalar::ratio(*ln as i64, *ld as i64),
        )
        .unwrap();
        let (gx, gy) = raw.gaps[i];
        if i > 0 && raw.breaks[i] {
            y = &y + &row_height + &Scalar::ratio(gy as i64, 2);
            x = Scalar::zero();
            row_height = Scalar::zero();
        }
        x = &x + &Scalar::ratio(gx as i64, 3);
        origins.push(Point::new(x.clone(), y.clone()));
        x = &x + &rect.w;
        if rect.l > row_height {
            row_height = rect.l.clone();
        }
        rects.push(rect);
    }
    Positioning::new(RectSet::new(rects), origins).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn retraction_never_grows_t(raw in raw_layout(8), pick in any::<proptest::sample::Index>()) {
        let p = build(&raw);
        prop_assert!(p.is_valid());
        let i = pick.index(p.len());
        let w = p.set.rects[i].w.clone();
        let dx = &w * &Scalar::ratio(1, 3); // strictly inside (0, w)
        let out = tx::retract_x(&p, i, &dx).unwrap();
        prop_assert!(out.is_valid());
        prop_assert!(out.measures().unwrap().t <= p.measures().unwrap().t);

        let l = p.set.rects[i].l.clone();
        let out = tx::retract_y(&p, i, &(&l * &Scalar::ratio(1, 2))).unwrap();
        prop_assert!(out.is_valid());
        prop_assert!(out.measures().unwrap().t <= p.measures().unwrap().t);
    }

    #[test]
    fn extension_bound_holds(
        raw in raw_layout(8),
        pick in any::<proptest::sample::Index>(),
        dn in 1u8..6,
        dd in 1u8..4,
    ) {
        let p = build(&raw);
        let i = pick.index(p.len());
        let dx = Scalar::ratio(dn as i64, dd as i64);
        let m = p.measures().unwrap();

        let out = tx::extend_x(&p, i, &dx).unwrap();
        prop_assert!(out.is_valid(), "extend_x broke validity: {:?}", out.validate());
        let bound = &m.t + &(&m.q * &dx);
        prop_assert!(out.measures().unwrap().t <= bound);

        let out = tx::extend_y(&p, i, &dx).unwrap();
        prop_assert!(out.is_valid());
        let bound = &m.t + &(&m.p * &dx);
        prop_assert!(out.measures().unwrap().t <= bound);
    }

    #[test]
    fn extension_xy_bound_holds(
        raw in raw_layout(8),
        pick in any::<proptest::sample::Index>(),
        dxn in 1u8..6,
        dyn_ in 1u8..6,
    ) {
        let p = build(&raw);
        let i = pick.index(p.len());
        let dx = Scalar::ratio(dxn as i64, 3);
        let dy = Scalar::ratio(dyn_ as i64, 2);
        let m = p.measures().unwrap();
        let out = tx::extend_xy(&p, i, &dx, &dy).unwrap();
        prop_assert!(out.is_valid());
        let bound = &m.t + &(&m.q * &dx) + &(&m.p * &dy) + &(&dx * &dy);
        prop_assert!(out.measures().unwrap().t <= bound);
    }

    #[test]
    fn squeeze_compacts_projections(raw in raw_layout(8)) {
        let p = build(&raw);
        let m = p.measures().unwrap();

        let out = tx::squeeze_x(&p);
        prop_assert!(out.is_valid(), "squeeze_x broke validity: {:?}", out.validate());
        let ms = out.measures().unwrap();
        prop_assert!(ms.p <= p.set.sum_widths());
        prop_assert!(ms.t <= m.t);
        prop_assert_eq!(&ms.q, &m.q);
        // idempotent
        prop_assert_eq!(tx::squeeze_x(&out), out);

        let out = tx::squeeze_y(&p);
        prop_assert!(out.is_valid());
        let ms = out.measures().unwrap();
        prop_assert!(ms.q <= p.set.sum_lengths());
        prop_assert!(ms.t <= m.t);
    }

    #[test]
    fn remove_tail_shrinks_t(raw in raw_layout(8), pick in any::<proptest::sample::Index>()) {
        let p = build(&raw);
        let n = 1 + pick.index(p.len());
        let out = tx::remove_tail(&p, n).unwrap();
        prop_assert_eq!(out.len(), n);
        prop_assert!(out.is_valid());
        prop_assert!(out.measures().unwrap().t <= p.measures().unwrap().t);
    }

    #[test]
    fn scaling_preserves_eta_exactly(raw in raw_layout(6), cn in 1u8..9, cd in 1u8..9) {
        let p = build(&raw);
        let c = Scalar::ratio(cn as i64, cd as i64);
        let out = tx::scale_positioning(&p, &c).unwrap();
        prop_assert!(out.is_valid());
        let m = p.measures().unwrap();
        let ms = out.measures().unwrap();
        prop_assert_eq!(&ms.eta, &m.eta);
        prop_assert_eq!(&ms.t, &(&m.t * &(&c * &c)));
    }
}
