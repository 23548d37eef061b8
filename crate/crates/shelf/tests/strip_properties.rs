//! Randomized checks of the strip-width guarantee and the composition law.

use packbound_core::{Point, Positioning, Rect, RectSet, Scalar};
use packbound_shelf::{append_right, pack_strip};
use proptest::prelude::*;

fn rational(num: i64, den: i64) -> Scalar {
    Scalar::ratio(num, den)
}

/// Batches whose lengths never exceed the strip height `a`.
fn batch_under(a_num: i64, a_den: i64) -> impl Strategy<Value = (RectSet, Scalar)> {
    let a = (a_num, a_den);
    proptest::collection::vec((1i64..40, 1i64..12, 1i64..=a_num), 1..25).prop_map(
        move |triples| {
            let height = rational(a.0, a.1);
            let rects = triples
                .into_iter()
                .map(|(wn, wd, ln)| {
                    // length = ln/a_den <= a_num/a_den = a by construction
                    Rect::new(rational(wn, wd), rational(ln, a.1)).unwrap()
                })
                .collect();
            (RectSet::new(rects), height)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn width_bound_holds_exactly((rects, a) in batch_under(7, 3)) {
        let packed = pack_strip(&rects, &a).unwrap();
        prop_assert!(packed.positioning.is_valid());

        let s = rects.total_area().unwrap();
        let bound = &(&(&Scalar::from_int(2) * &s) / &a) + &rects.max_width().unwrap();
        prop_assert!(packed.achieved_width <= bound,
            "b = {} > {} = 2S/a + w_max", packed.achieved_width, bound);

        // every rectangle inside [0, b] x [0, a]
        for i in 0..packed.positioning.len() {
            let (x_lo, x_hi, y_lo, y_hi) = packed.positioning.span(i);
            prop_assert!(x_lo >= Scalar::zero() && x_hi <= packed.achieved_width);
            prop_assert!(y_lo >= Scalar::zero() && y_hi <= a);
        }
    }

    #[test]
    fn composition_adds_exact_width(
        (rects, a) in batch_under(5, 2),
        base_w in 1i64..6,
        extra_h in 0i64..4,
    ) {
        // base: a single rectangle at least as tall as the strip
        let base_h = &a + &Scalar::from_int(extra_h);
        let base = Positioning::new(
            RectSet::new(vec![Rect::new(Scalar::from_int(base_w), base_h).unwrap()]),
            vec![Point::of(-2, -1)],
        )
        .unwrap();
        let batch = pack_strip(&rects, &a).unwrap();
        let combined = append_right(&base, &batch).unwrap();

        prop_assert!(combined.is_valid());
        let before = base.measures().unwrap();
        let after = combined.measures().unwrap();
        prop_assert_eq!(&after.q, &before.q);
        prop_assert_eq!(&after.p, &(&before.p + &batch.achieved_width));
        prop_assert_eq!(&after.t, &(&after.p * &after.q));
    }
}
