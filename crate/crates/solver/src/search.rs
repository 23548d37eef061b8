//! Branch-and-bound over sequence pairs, integer domain.
//!
//! The search builds the second order of a sequence pair left to right; when
//! a rectangle enters, it also chooses its insertion slot in the first order
//! restricted to the rectangles placed so far.  Those choices biject with
//! complete sequence pairs, and a rectangle's coordinates are final the
//! moment it is placed: the rectangles at smaller first-order slots are its
//! left predecessors, the rest sit below it.  Every node therefore carries
//! exact partial extents `pmax`/`qmax` and the prefix bound
//!
//! ```text
//! lb = max(total_area, max(pmax, unplaced widths) * max(qmax, unplaced lengths))
//! ```
//!
//! which now prunes both permutations at once.  Subtrees are cut only when
//! `lb` strictly exceeds the best bounding area found so far, so every leaf
//! achieving the optimum survives under any thread interleaving, and the
//! published result — the minimum of `(T, p, flattened origins)` over all
//! surviving leaves and the deterministic seed layouts — does not depend on
//! the degree of parallelism.
//!
//! Symmetry: swapping the two orders mirrors a packing vertically and
//! reversing both rotates it by 180 degrees, and all four variants share the
//! same bounding area.  Writing `a`/`b` for the final positions of rectangle
//! 0 in the first and second order, every orbit under those reflections has
//! a member with `a <= b` and `a + b <= n-1`.  The search enforces exactly
//! that: `b` is the depth at which rectangle 0 is placed, and since later
//! insertions can only increase `a`, the running rank check is sound.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::budget::SolveBudget;
use crate::num::SolverInt;

const RECT0_UNPLACED: usize = usize::MAX;

/// Integer-scaled instance.
pub(crate) struct Instance<I> {
    pub n: usize,
    pub w: Vec<I>,
    pub l: Vec<I>,
    /// Exact total area (lower bound on any bounding area).
    pub area: I,
    /// Branching order: by area descending, ties by index. Affects speed
    /// and node counts, never the published result.
    pub order: Vec<usize>,
}

impl<I: SolverInt> Instance<I> {
    pub fn new(w: Vec<I>, l: Vec<I>) -> Self {
        let n = w.len();
        let mut area = I::zero();
        let mut areas = Vec::with_capacity(n);
        for i in 0..n {
            let a = w[i].mul_ref(&l[i]);
            area = area.add_ref(&a);
            areas.push(a);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| areas[b].cmp(&areas[a]).then(a.cmp(&b)));
        Instance { n, w, l, area, order }
    }

    fn max_length(&self) -> I {
        self.l.iter().max().cloned().expect("non-empty")
    }
}

/// A packing found by the search, keyed for canonical selection.
/// Comparison order is exactly the tie-break: `t`, then `p`, then the
/// origin vector `[x0, y0, x1, y1, ...]` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Candidate<I> {
    pub t: I,
    pub p: I,
    pub flat: Vec<I>,
}

pub(crate) struct Outcome<I> {
    pub best: Candidate<I>,
    pub nodes: u64,
    pub completed: bool,
}

struct Shared<I> {
    best: Mutex<Option<Candidate<I>>>,
    generation: AtomicU64,
    nodes: AtomicU64,
    aborted: AtomicBool,
    node_cap: u64,
    deadline: Option<Instant>,
}

impl<I: SolverInt> Shared<I> {
    fn merge(&self, cand: Candidate<I>) {
        let mut guard = self.best.lock().unwrap();
        if guard.as_ref().is_none_or(|cur| cand < *cur) {
            *guard = Some(cand);
            self.generation.fetch_add(1, Ordering::Relaxed);
        }
    }

    fn flush_nodes(&self, count: u64) {
        if count == 0 {
            return;
        }
        let total = self.nodes.fetch_add(count, Ordering::Relaxed) + count;
        if total > self.node_cap {
            self.aborted.store(true, Ordering::Relaxed);
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.aborted.store(true, Ordering::Relaxed);
            }
        }
    }
}

struct Worker<'a, I: SolverInt> {
    inst: &'a Instance<I>,
    shared: &'a Shared<I>,
    n1: usize,
    /// Placed rectangles in first-order sequence.
    pos_list: Vec<usize>,
    x: Vec<I>,
    y: Vec<I>,
    /// Depth at which rectangle 0 entered the second order.
    rect0_depth: usize,
    /// Current first-order rank of rectangle 0 (valid once placed); only
    /// ever grows, capped by `min(rect0_depth, n1 - rect0_depth)`.
    rank0: usize,
    pending_nodes: u64,
    flush_every: u64,
    best_t: Option<I>,
    seen_generation: u64,
}

impl<'a, I: SolverInt> Worker<'a, I> {
    fn new(inst: &'a Instance<I>, shared: &'a Shared<I>) -> Self {
        let n = inst.n;
        let flush_every = if shared.node_cap < 10_000 { 1 } else { 256 };
        Worker {
            inst,
            shared,
            n1: n - 1,
            pos_list: Vec::with_capacity(n),
            x: vec![I::zero(); n],
            y: vec![I::zero(); n],
            rect0_depth: RECT0_UNPLACED,
            rank0: 0,
            pending_nodes: 0,
            flush_every,
            best_t: None,
            seen_generation: u64::MAX,
        }
    }

    fn refresh_best(&mut self) {
        let generation = self.shared.generation.load(Ordering::Relaxed);
        if generation != self.seen_generation {
            self.seen_generation = generation;
            self.best_t = self
                .shared
                .best
                .lock()
                .unwrap()
                .as_ref()
                .map(|c| c.t.clone());
        }
    }

    fn count_node(&mut self) {
        self.pending_nodes += 1;
        if self.pending_nodes >= self.flush_every {
            self.shared.flush_nodes(self.pending_nodes);
            self.pending_nodes = 0;
        }
    }

    fn flush(&mut self) {
        self.shared.flush_nodes(self.pending_nodes);
        self.pending_nodes = 0;
    }

    /// Cap on rectangle 0's first-order rank, once placed.
    fn rank0_limit(&self) -> usize {
        self.rect0_depth.min(self.n1 - self.rect0_depth)
    }

    /// Whether inserting `b` at slot `s` with the current prefix keeps the
    /// reduced-space constraints satisfiable.  `depth` is the number of
    /// rectangles already placed.
    fn slot_allowed(&self, b: usize, s: usize, depth: usize) -> bool {
        if b == 0 {
            s <= depth.min(self.n1 - depth)
        } else if self.rect0_depth != RECT0_UNPLACED && s <= self.rank0 {
            self.rank0 + 1 <= self.rank0_limit()
        } else {
            true
        }
    }

    /// Places `b` at slot `s`, computing its final coordinates by scanning
    /// the slot split.  Used for task priming; the hot path in `dfs` does
    /// the same thing with precomputed prefix/suffix maxima.
    fn place(&mut self, b: usize, s: usize, depth: usize) -> (I, I) {
        let mut xb = I::zero();
        let mut yb = I::zero();
        for (idx, &a) in self.pos_list.iter().enumerate() {
            if idx < s {
                let reach = self.x[a].add_ref(&self.inst.w[a]);
                if reach > xb {
                    xb = reach;
                }
            } else {
                let reach = self.y[a].add_ref(&self.inst.l[a]);
                if reach > yb {
                    yb = reach;
                }
            }
        }
        let reach_x = xb.add_ref(&self.inst.w[b]);
        let reach_y = yb.add_ref(&self.inst.l[b]);
        self.x[b] = xb;
        self.y[b] = yb;
        if b == 0 {
            self.rect0_depth = depth;
            self.rank0 = s;
        } else if self.rect0_depth != RECT0_UNPLACED && s <= self.rank0 {
            self.rank0 += 1;
        }
        self.pos_list.insert(s, b);
        (reach_x, reach_y)
    }

    fn unplace(&mut self, s: usize) {
        let b = self.pos_list.remove(s);
        if b == 0 {
            self.rect0_depth = RECT0_UNPLACED;
        } else if self.rect0_depth != RECT0_UNPLACED && s <= self.rank0 {
            self.rank0 -= 1;
        }
    }

    fn dfs(&mut self, depth: usize, pmax: &I, qmax: &I) {
        if depth == self.inst.n {
            self.emit_leaf(pmax, qmax);
            return;
        }
        if self.shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        let k = depth;

        // prefix maxima of x-reach and suffix maxima of y-reach over the
        // current first-order sequence; slot s splits it into left
        // predecessors [0, s) and supports [s, k)
        let mut pre = Vec::with_capacity(k + 1);
        pre.push(I::zero());
        for idx in 0..k {
            let a = self.pos_list[idx];
            let reach = self.x[a].add_ref(&self.inst.w[a]);
            let prev = &pre[idx];
            pre.push(if reach > *prev { reach } else { prev.clone() });
        }
        let mut suf = vec![I::zero(); k + 1];
        for idx in (0..k).rev() {
            let a = self.pos_list[idx];
            let reach = self.y[a].add_ref(&self.inst.l[a]);
            suf[idx] = if reach > suf[idx + 1] {
                reach
            } else {
                suf[idx + 1].clone()
            };
        }

        // top-two unplaced widths and lengths, for O(1) exclude-one maxima
        let mut placed = vec![false; self.inst.n];
        for &a in &self.pos_list {
            placed[a] = true;
        }
        let mut w_top: [Option<(I, usize)>; 2] = [None, None];
        let mut l_top: [Option<(I, usize)>; 2] = [None, None];
        for r in 0..self.inst.n {
            if placed[r] {
                continue;
            }
            push_top2(&mut w_top, self.inst.w[r].clone(), r);
            push_top2(&mut l_top, self.inst.l[r].clone(), r);
        }

        for oi in 0..self.inst.n {
            let b = self.inst.order[oi];
            if placed[b] {
                continue;
            }
            let w_rest = exclude_top2(&w_top, b);
            let l_rest = exclude_top2(&l_top, b);

            for s in 0..=k {
                if !self.slot_allowed(b, s, depth) {
                    if b == 0 {
                        break; // larger slots only move rank0 further out
                    }
                    continue;
                }
                self.count_node();

                let reach_x = pre[s].add_ref(&self.inst.w[b]);
                let reach_y = suf[s].add_ref(&self.inst.l[b]);
                let npmax = if reach_x > *pmax { &reach_x } else { pmax };
                let nqmax = if reach_y > *qmax { &reach_y } else { qmax };

                // prefix bound; strictly-greater pruning keeps every
                // optimal leaf reachable regardless of interleaving
                let p_lb = match w_rest {
                    Some(w) if *w > *npmax => w,
                    _ => npmax,
                };
                let q_lb = match l_rest {
                    Some(l) if *l > *nqmax => l,
                    _ => nqmax,
                };
                let mut lb = p_lb.mul_ref(q_lb);
                if self.inst.area > lb {
                    lb = self.inst.area.clone();
                }
                self.refresh_best();
                if let Some(best_t) = &self.best_t {
                    if lb > *best_t {
                        continue;
                    }
                }

                let npmax = npmax.clone();
                let nqmax = nqmax.clone();
                self.x[b] = pre[s].clone();
                self.y[b] = suf[s].clone();
                if b == 0 {
                    self.rect0_depth = depth;
                    self.rank0 = s;
                } else if self.rect0_depth != RECT0_UNPLACED && s <= self.rank0 {
                    self.rank0 += 1;
                }
                self.pos_list.insert(s, b);
                self.dfs(depth + 1, &npmax, &nqmax);
                self.unplace(s);
            }
        }
    }

    fn emit_leaf(&mut self, pmax: &I, qmax: &I) {
        let t = pmax.mul_ref(qmax);
        let mut flat = Vec::with_capacity(2 * self.inst.n);
        for id in 0..self.inst.n {
            flat.push(self.x[id].clone());
            flat.push(self.y[id].clone());
        }
        self.shared.merge(Candidate {
            t,
            p: pmax.clone(),
            flat,
        });
    }
}

fn push_top2<I: SolverInt>(top: &mut [Option<(I, usize)>; 2], v: I, r: usize) {
    match &top[0] {
        Some((best, _)) if *best >= v => match &top[1] {
            Some((second, _)) if *second >= v => {}
            _ => top[1] = Some((v, r)),
        },
        _ => {
            top[1] = top[0].take();
            top[0] = Some((v, r));
        }
    }
}

fn exclude_top2<'t, I: SolverInt>(top: &'t [Option<(I, usize)>; 2], b: usize) -> Option<&'t I> {
    match &top[0] {
        Some((v, r)) if *r != b => Some(v),
        Some(_) => top[1].as_ref().map(|(v, _)| v),
        None => None,
    }
}

/// Deterministic upper-bound layouts merged before the search starts: a
/// row, a column, and next-fit-decreasing-width columns at a few heights.
/// They are part of the candidate universe, so they also participate in the
/// canonical tie-break.
fn seed_candidates<I: SolverInt>(inst: &Instance<I>) -> Vec<Candidate<I>> {
    let n = inst.n;
    let mut seeds = Vec::new();

    // Row: input order, left to right.
    {
        let mut flat = Vec::with_capacity(2 * n);
        let mut xc = I::zero();
        let mut q = I::zero();
        for i in 0..n {
            flat.push(xc.clone());
            flat.push(I::zero());
            xc = xc.add_ref(&inst.w[i]);
            if inst.l[i] > q {
                q = inst.l[i].clone();
            }
        }
        seeds.push(Candidate {
            t: xc.mul_ref(&q),
            p: xc,
            flat,
        });
    }

    // Column: input order, bottom to top.
    {
        let mut flat = Vec::with_capacity(2 * n);
        let mut yc = I::zero();
        let mut p = I::zero();
        for i in 0..n {
            flat.push(I::zero());
            flat.push(yc.clone());
            yc = yc.add_ref(&inst.l[i]);
            if inst.w[i] > p {
                p = inst.w[i].clone();
            }
        }
        seeds.push(Candidate {
            t: p.mul_ref(&yc),
            p,
            flat,
        });
    }

    // Width-sorted columns capped at several heights.
    let max_l = inst.max_length();
    let sqrt_area = {
        let root = inst.area.to_bigint().sqrt();
        I::try_from_bigint(&root).unwrap_or_else(|| max_l.clone())
    };
    let sum_l = inst
        .l
        .iter()
        .fold(I::zero(), |acc, v| acc.add_ref(v));
    let mut caps = vec![
        max_l.clone(),
        max_l.add_ref(&max_l),
        if sqrt_area > max_l { sqrt_area } else { max_l.clone() },
        sum_l,
    ];
    caps.sort();
    caps.dedup();
    for cap in caps {
        seeds.push(nfdw_columns(inst, &cap));
    }
    seeds
}

/// Next-fit by decreasing width into vertical columns of height at most
/// `cap` (clamped to the longest rectangle). Valid by construction.
fn nfdw_columns<I: SolverInt>(inst: &Instance<I>, cap: &I) -> Candidate<I> {
    let n = inst.n;
    let max_l = inst.max_length();
    let cap = if *cap < max_l { &max_l } else { cap };
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| inst.w[b].cmp(&inst.w[a]).then(a.cmp(&b)));

    let mut xs = vec![I::zero(); n];
    let mut ys = vec![I::zero(); n];
    let mut cur_x = I::zero();
    let mut col_w: Option<I> = None;
    let mut cur_y = I::zero();
    let mut q = I::zero();
    for &i in &idx {
        match &col_w {
            None => col_w = Some(inst.w[i].clone()),
            Some(wc) => {
                if cur_y.add_ref(&inst.l[i]) > *cap {
                    cur_x = cur_x.add_ref(wc);
                    col_w = Some(inst.w[i].clone());
                    cur_y = I::zero();
                }
            }
        }
        xs[i] = cur_x.clone();
        ys[i] = cur_y.clone();
        cur_y = cur_y.add_ref(&inst.l[i]);
        if cur_y > q {
            q = cur_y.clone();
        }
    }
    let p = cur_x.add_ref(col_w.as_ref().expect("non-empty"));
    let mut flat = Vec::with_capacity(2 * n);
    for i in 0..n {
        flat.push(xs[i].clone());
        flat.push(ys[i].clone());
    }
    Candidate {
        t: p.mul_ref(&q),
        p,
        flat,
    }
}

pub(crate) fn run_search<I: SolverInt>(inst: &Instance<I>, budget: &SolveBudget) -> Outcome<I> {
    let shared = Shared {
        best: Mutex::new(None),
        generation: AtomicU64::new(0),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        node_cap: budget.max_nodes.unwrap_or(u64::MAX),
        deadline: budget.max_time.map(|d| Instant::now() + d),
    };
    for seed in seed_candidates(inst) {
        shared.merge(seed);
    }

    let threads = budget.effective_threads();
    if threads <= 1 || inst.n < 4 {
        let mut worker = Worker::new(inst, &shared);
        worker.dfs(0, &I::zero(), &I::zero());
        worker.flush();
    } else {
        // Split on the first two placements; workers are stateless between
        // tasks and merge through `shared`.
        let mut tasks = Vec::new();
        for oi in 0..inst.n {
            for oj in 0..inst.n {
                if oi == oj {
                    continue;
                }
                for s in 0..=1usize {
                    tasks.push((inst.order[oi], inst.order[oj], s));
                }
            }
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            tasks.par_iter().for_each(|&(b0, b1, s1)| {
                let mut worker = Worker::new(inst, &shared);
                if !worker.slot_allowed(b0, 0, 0) {
                    return;
                }
                let (px0, qy0) = worker.place(b0, 0, 0);
                if !worker.slot_allowed(b1, s1, 1) {
                    return;
                }
                let (px1, qy1) = worker.place(b1, s1, 1);
                let pmax = if px1 > px0 { px1 } else { px0 };
                let qmax = if qy1 > qy0 { qy1 } else { qy0 };
                worker.dfs(2, &pmax, &qmax);
                worker.flush();
            });
        });
    }

    let best = shared
        .best
        .into_inner()
        .unwrap()
        .expect("seed candidates always exist");
    Outcome {
        best,
        nodes: shared.nodes.load(Ordering::Relaxed),
        completed: !shared.aborted.load(Ordering::Relaxed),
    }
}
