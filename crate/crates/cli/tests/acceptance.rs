//! End-to-end acceptance checks, one test per criterion. Each prints a
//! `criterion NN (...): pass` line on success; a failing assertion fails the
//! test and the line is absent. Randomized criteria use fixed seeds so runs
//! are reproducible.

use std::collections::BTreeMap;
use std::process::Command;

use packbound_bounds::{
    eta_interval, eta_modulus, expansion_floor, lemma2_p_bound, lemma3_bound, refute_perfect,
    tail_bound, EtaModulus, Interval, Mode, TailData, Verdict,
};
use packbound_core::{Point, Positioning, Rect, RectSet, Scalar};
use packbound_families::{Family, Harmonic, Rounding};
use packbound_shelf::{append_right, pack_strip};
use packbound_solver::{
    canonical_best, canonical_best_with, min_bounding_area, oracle_min_area, SolveBudget,
};
use packbound_transforms::{ops, Delta, Perturbation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sc(text: &str) -> Scalar {
    text.parse().unwrap()
}

fn solve(set: &RectSet) -> packbound_solver::SolveResult {
    let result = min_bounding_area(set, &SolveBudget::default()).expect("solvable");
    assert!(result.proven_optimal, "unexpected budget exhaustion");
    result
}

/// Random set with integer sides drawn from `1..4`.
fn random_int_set(rng: &mut ChaCha8Rng, max_n: usize) -> RectSet {
    let n = rng.gen_range(1..=max_n);
    RectSet::new(
        (0..n)
            .map(|_| Rect::of(rng.gen_range(1..4), rng.gen_range(1..4)))
            .collect(),
    )
}

/// Random set with small rational sides (quarters up to 2).
fn random_rational_set(rng: &mut ChaCha8Rng, max_n: usize) -> RectSet {
    let n = rng.gen_range(1..=max_n);
    RectSet::new(
        (0..n)
            .map(|_| {
                Rect::new(
                    Scalar::ratio(rng.gen_range(1..=8), 4),
                    Scalar::ratio(rng.gen_range(1..=8), 4),
                )
                .unwrap()
            })
            .collect(),
    )
}

/// Random valid positioning: rows of rectangles with nonnegative gaps.
/// `min_gap_quarters > 0` forces genuine x-gaps between neighbors.
fn random_layout(rng: &mut ChaCha8Rng, max_n: usize, min_gap_quarters: i64) -> Positioning {
    let n = rng.gen_range(1..=max_n);
    let mut rects = Vec::new();
    let mut origins = Vec::new();
    let mut x = Scalar::zero();
    let mut y = Scalar::zero();
    let mut row_height = Scalar::zero();
    for i in 0..n {
        let r = Rect::of(rng.gen_range(1..5), rng.gen_range(1..5));
        if i > 0 && rng.gen_bool(0.3) {
            y = &y + &row_height + &Scalar::ratio(rng.gen_range(0..3), 2);
            x = Scalar::zero();
            row_height = Scalar::zero();
        }
        x = &x + &Scalar::ratio(rng.gen_range(min_gap_quarters..min_gap_quarters + 4), 4);
        origins.push(Point::new(x.clone(), y.clone()));
        x = &x + &r.w;
        if r.l > row_height {
            row_height = r.l.clone();
        }
        rects.push(r);
    }
    Positioning::new(RectSet::new(rects), origins).unwrap()
}

/// Admissible perturbation of `set`, built by drawing the perturbed sides
/// directly (so positivity is automatic), together with those sides.
fn random_perturbation(rng: &mut ChaCha8Rng, set: &RectSet) -> Perturbation {
    let deltas = set
        .rects
        .iter()
        .map(|r| {
            let new_w = Scalar::ratio(rng.gen_range(1..=8), 4);
            let new_l = Scalar::ratio(rng.gen_range(1..=8), 4);
            Delta {
                dw: &new_w - &r.w,
                dl: &new_l - &r.l,
            }
        })
        .collect();
    Perturbation::new(deltas)
}

#[test]
fn criterion_01_solver_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC01);
    for case in 0..100 {
        let set = random_int_set(&mut rng, 4);
        let expected = oracle_min_area(&set).unwrap();
        let got = solve(&set);
        assert_eq!(got.t0, expected, "case {case}: {set:?}");
    }
    for k in 1..=4usize {
        let set = RectSet::new(vec![Rect::of(1, 1); k]);
        let expected = oracle_min_area(&set).unwrap();
        assert_eq!(solve(&set).t0, expected, "{k} unit squares");
    }
    println!("criterion 01 (solver matches oracle): pass");
}

#[test]
fn criterion_02_local_edit_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC02);
    for case in 0..1000 {
        let p = random_layout(&mut rng, 8, 0);
        let m = p.measures().unwrap();
        let i = rng.gen_range(0..p.len());
        let out = match case % 3 {
            0 => {
                // shrink one width by a quarter to three quarters of it
                let dx = &p.set.rects[i].w * &Scalar::ratio(rng.gen_range(1..4), 4);
                let out = ops::retract_x(&p, i, &dx).unwrap();
                let t = out.measures().unwrap().t;
                assert!(t <= m.t, "case {case}: retraction grew T");
                out
            }
            1 => {
                let dx = Scalar::ratio(rng.gen_range(1..=8), 4);
                let out = ops::extend_x(&p, i, &dx).unwrap();
                let t = out.measures().unwrap().t;
                assert!(
                    t <= &m.t + &(&m.q * &dx),
                    "case {case}: extension beyond T + q*dx"
                );
                out
            }
            _ => {
                let dx = Scalar::ratio(rng.gen_range(1..=8), 4);
                let dy = Scalar::ratio(rng.gen_range(1..=8), 4);
                let out = ops::extend_xy(&p, i, &dx, &dy).unwrap();
                let t = out.measures().unwrap().t;
                let bound = &(&m.t + &(&m.q * &dx)) + &(&(&m.p * &dy) + &(&dx * &dy));
                assert!(t <= bound, "case {case}: joint extension beyond its bound");
                out
            }
        };
        assert!(out.is_valid(), "case {case}: output overlaps");
    }
    println!("criterion 02 (local edit bounds): pass");
}

#[test]
fn criterion_03_squeeze_and_width_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC03);
    for case in 0..200 {
        let p = random_layout(&mut rng, 6, 1);
        let squeezed = ops::squeeze_x(&p);
        assert!(squeezed.is_valid(), "case {case}: squeeze output overlaps");
        let m = squeezed.measures().unwrap();
        assert!(
            m.p <= p.set.sum_widths(),
            "case {case}: squeezed width exceeds the sum of widths"
        );
    }
    for case in 0..50 {
        let set = random_rational_set(&mut rng, 3);
        let d = random_perturbation(&mut rng, &set);
        let perturbed = d.apply(&set).unwrap();
        let best = canonical_best(&perturbed).unwrap();
        let p_opt = best.measures().unwrap().p;
        let bound = lemma2_p_bound(&set, &d).unwrap();
        assert!(
            p_opt <= bound,
            "case {case}: optimal width {p_opt} exceeds bound {bound}"
        );
    }
    println!("criterion 03 (squeeze and width bound): pass");
}

#[test]
fn criterion_04_area_change_dominance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC04);
    for case in 0..50 {
        let set = random_rational_set(&mut rng, 3);
        let d = random_perturbation(&mut rng, &set);
        let perturbed = d.apply(&set).unwrap();
        let t0 = solve(&set).t0;
        let t0_new = solve(&perturbed).t0;
        let change = (&t0_new - &t0).abs();
        let bound = lemma3_bound(&set, &d).unwrap();
        assert!(
            change <= bound,
            "case {case}: |dT0| = {change} exceeds {bound}"
        );
    }
    println!("criterion 04 (area change dominance): pass");
}

#[test]
fn criterion_05_efficiency_continuity() {
    let set = RectSet::new(vec![Rect::of(2, 2), Rect::of(1, 1), Rect::of(3, 1)]);
    let eta0 = solve(&set).eta0;
    let budget = SolveBudget::default();

    let mut measured = Vec::new();
    let mut moduli = Vec::new();
    let mut scale = Scalar::one();
    for _ in 0..7 {
        let mut d = Perturbation::zero(3);
        d.deltas[2].dl = scale.clone();
        let perturbed = d.apply(&set).unwrap();
        let eta_new = solve(&perturbed).eta0;
        measured.push((&eta_new - &eta0).abs());
        match eta_modulus(&set, &d, &budget).unwrap() {
            EtaModulus::Bounded(m) => moduli.push(m),
            EtaModulus::Unbounded => panic!("modulus unbounded at scale {scale}"),
        }
        scale = &scale * &sc("1/2");
    }
    for k in 0..7 {
        assert!(
            measured[k] <= moduli[k],
            "scale 1/2^{k}: measured {} above modulus {}",
            measured[k],
            moduli[k]
        );
        if k > 0 {
            assert!(measured[k] < measured[k - 1], "measured not decreasing at {k}");
            assert!(moduli[k] < moduli[k - 1], "modulus not decreasing at {k}");
        }
    }
    assert!(measured[6] < sc("1/100"), "measured change did not vanish");
    assert!(moduli[6] < sc("1/25"), "modulus did not vanish");
    println!("criterion 05 (efficiency continuity): pass");
}

#[test]
fn criterion_06_prefix_chain_composition() {
    let family = Harmonic;
    let mut solved = BTreeMap::new();
    for n in [3usize, 4, 5, 6, 8] {
        let prefix = family.prefix(n, Rounding::Down).unwrap();
        solved.insert(n, solve(&prefix));
    }
    // prefix optima only grow with the prefix
    let optima: Vec<&Scalar> = solved.values().map(|r| &r.t0).collect();
    for pair in optima.windows(2) {
        assert!(pair[0] <= pair[1], "prefix optimum decreased");
    }

    for (n, m) in [(3usize, 5usize), (4, 6), (4, 8)] {
        let short = &solved[&n];
        let long = &solved[&m];
        assert!(short.t0 <= long.t0, "({n},{m}): chain lower end failed");

        let batch = RectSet::new(
            (n + 1..=m)
                .map(|i| {
                    Rect::new(Scalar::ratio(1, i as i64 + 1), Scalar::ratio(1, i as i64)).unwrap()
                })
                .collect(),
        );
        let q_prefix = short.best.measures().unwrap().q;
        let td = TailData {
            n,
            s_tail: batch.total_area().unwrap(),
            r_n: batch.rects.iter().map(|r| &r.l * &r.l).sum(),
            l_next: Scalar::ratio(1, n as i64 + 1),
            w1: sc("1/2"),
            q_prefix: q_prefix.clone(),
            t0_prefix: short.t0.clone(),
        };
        let cost = tail_bound(&td, Mode::Constructive).unwrap();
        assert!(
            long.t0 <= &short.t0 + &cost,
            "({n},{m}): chain upper end failed"
        );

        // the bound is realized by an actual strip composition
        let packed = pack_strip(&batch, &q_prefix).unwrap();
        let composed = append_right(&short.best, &packed).unwrap();
        assert!(composed.is_valid(), "({n},{m}): composition overlaps");
        let t_composed = composed.measures().unwrap().t;
        assert!(long.t0 <= t_composed, "({n},{m}): composition beat the optimum");
        assert!(
            t_composed <= &short.t0 + &cost,
            "({n},{m}): composition exceeds the certified cost"
        );
    }
    println!("criterion 06 (prefix chain composition): pass");
}

#[test]
fn criterion_07_strip_width_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC07);
    for case in 0..200 {
        let batch = random_rational_set(&mut rng, 6);
        let max_l = batch.max_length().unwrap();
        let a = &max_l * &Scalar::ratio(rng.gen_range(4..=8), 4);
        let packed = pack_strip(&batch, &a).unwrap();
        assert!(packed.positioning.is_valid(), "case {case}: strip overlaps");
        let total = batch.total_area().unwrap();
        let bound = &(&(&total + &total) / &a) + &batch.max_width().unwrap();
        assert!(
            packed.achieved_width <= bound,
            "case {case}: width {} exceeds 2S/a + w_max = {}",
            packed.achieved_width,
            bound
        );
    }
    println!("criterion 07 (strip width bound): pass");
}

#[test]
fn criterion_08_refutation_end_to_end() {
    let budget = SolveBudget::default();
    let pair =
        packbound_families::Custom::new(RectSet::new(vec![Rect::of(2, 2), Rect::of(1, 1)]))
            .unwrap();
    let report = refute_perfect(&pair, 2, Mode::Analytic, &budget).unwrap();
    assert_eq!(report.verdict, Verdict::Refuted);
    assert_eq!(report.interval.hi, sc("5/6"));

    let six = eta_interval(&Harmonic, 6, Mode::Analytic, &budget).unwrap();
    assert!(six.lo <= six.hi);
    assert!(six.lo.is_positive());
    assert!(six.verified.iter().any(|line| line.contains("C1")));
    assert!(six.verified.iter().any(|line| line.contains("C2")));

    let intervals: Vec<Interval> = (3..=6)
        .map(|n| eta_interval(&Harmonic, n, Mode::Analytic, &budget).unwrap())
        .collect();
    for i in 0..intervals.len() {
        for j in i + 1..intervals.len() {
            assert!(
                intervals[i].intersects(&intervals[j]),
                "intervals at n = {} and n = {} are disjoint",
                i + 3,
                j + 3
            );
        }
    }
    println!("criterion 08 (refutation end to end): pass");
}

#[test]
fn criterion_09_expansion_floor() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC09);
    for case in 0..20 {
        let set = random_rational_set(&mut rng, 3);
        let eta0 = solve(&set).eta0;
        let floor = expansion_floor(&set).unwrap();
        let guarantee = eta0.min(floor);
        for dx in ["1/4", "1/2", "1", "2", "4"] {
            let mut grown = set.clone();
            grown.rects[0].w = &grown.rects[0].w + &sc(dx);
            let eta_grown = solve(&grown).eta0;
            assert!(
                eta_grown >= guarantee,
                "case {case}, dx = {dx}: eta {eta_grown} fell below {guarantee}"
            );
        }
    }
    println!("criterion 09 (expansion floor): pass");
}

fn run_cli(args: &[&str], threads: &str, dir: &std::path::Path) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_packbound"))
        .args(args)
        .env("PACKBOUND_THREADS", threads)
        .current_dir(dir)
        .output()
        .expect("packbound runs");
    let code = out.status.code().expect("exit code");
    (out.stdout, code)
}

#[test]
fn criterion_10_determinism() {
    // library level: repeated canonical solves agree across thread counts
    let set = RectSet::new(vec![
        Rect::new(sc("1/2"), sc("1")).unwrap(),
        Rect::new(sc("1/3"), sc("1/2")).unwrap(),
        Rect::new(sc("3/2"), sc("2/3")).unwrap(),
        Rect::new(sc("1"), sc("1/5")).unwrap(),
    ]);
    let mut renditions = Vec::new();
    for threads in [1usize, 4, 1, 4] {
        let budget = SolveBudget {
            threads: Some(threads),
            ..SolveBudget::default()
        };
        let best = canonical_best_with(&set, &budget).unwrap();
        renditions.push(serde_json::to_string(&best).unwrap());
    }
    assert!(
        renditions.windows(2).all(|w| w[0] == w[1]),
        "canonical packing varies with thread count"
    );

    let dir = tempfile::tempdir().unwrap();
    let rects_path = dir.path().join("rects.json");
    std::fs::write(
        &rects_path,
        r#"{"rects":[{"w":"1/2","l":"1"},{"w":"1/3","l":"1/2"},{"w":"1/4","l":"1/3"},{"w":"1/5","l":"1/4"},{"w":"1/6","l":"1/5"}]}"#,
    )
    .unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "4", "1", "4"] {
        let (stdout, code) = run_cli(
            &["solve", "--input", "rects.json"],
            threads,
            dir.path(),
        );
        assert_eq!(code, 0);
        outputs.push(stdout);
    }
    assert!(
        outputs.windows(2).all(|w| w[0] == w[1]),
        "solve stdout varies across runs or thread counts"
    );
    let text = String::from_utf8(outputs[0].clone()).unwrap();
    assert!(text.contains("\"t0\": \"11/12\""), "unexpected optimum");

    let pos_path = dir.path().join("pos.json");
    std::fs::write(
        &pos_path,
        r#"{"rects":[{"w":"1","l":"2"},{"w":"2","l":"1"},{"w":"1","l":"1"}],"origins":[{"x":"0","y":"0"},{"x":"1","y":"0"},{"x":"1","y":"1"}]}"#,
    )
    .unwrap();
    let mut svgs = Vec::new();
    let mut reports = Vec::new();
    for run in 0..2 {
        let out = dir.path().join(format!("out{run}.svg"));
        let out_name = out.file_name().unwrap().to_str().unwrap().to_owned();
        let (stdout, code) = run_cli(
            &["render", "--input", "pos.json", "--out", &out_name],
            "1",
            dir.path(),
        );
        assert_eq!(code, 0);
        reports.push(stdout);
        svgs.push(std::fs::read(&out).unwrap());
    }
    assert_eq!(svgs[0], svgs[1], "render bytes differ between runs");
    assert_ne!(reports[0], reports[1], "reports name different output files");
    println!("criterion 10 (determinism): pass");
}
