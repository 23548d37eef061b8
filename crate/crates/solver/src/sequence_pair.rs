//! Sequence-pair representation of packings.
//!
//! A sequence pair is two permutations `(pos, neg)` of the rectangle
//! indices. For rectangles `i != j`:
//!
//! * `i` before `j` in both orders  => `i` is left of `j`;
//! * `i` after `j` in `pos` but before `j` in `neg` => `i` is below `j`.
//!
//! Decoding assigns every rectangle the minimal coordinates consistent with
//! those constraints (a longest-path evaluation); the result is always a
//! valid positioning. Encoding recovers a pair from a valid positioning by
//! topologically sorting the *forced* separation constraints: a pair is free
//! in an order exactly when both of its possible readings are true of the
//! given placement, so any completion of the forced constraints decodes to
//! extents no larger than the original. That round-trip property makes the
//! pair space complete for fixed-orientation packings and is what the
//! branch-and-bound search relies on.

use packbound_core::{Point, Positioning, RectSet, Scalar};

use crate::error::SolverError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequencePair {
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
}

fn check_permutation(order: &[usize], n: usize) -> Result<(), SolverError> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(SolverError::NotAPermutation { n });
    }
    for &v in order {
        if v >= n || seen[v] {
            return Err(SolverError::NotAPermutation { n });
        }
        seen[v] = true;
    }
    Ok(())
}

impl SequencePair {
    pub fn new(pos: Vec<usize>, neg: Vec<usize>) -> Result<Self, SolverError> {
        let n = pos.len();
        check_permutation(&pos, n)?;
        check_permutation(&neg, n)?;
        Ok(SequencePair { pos, neg })
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    /// Identity pair: everything in one row, input order.
    pub fn row(n: usize) -> Self {
        SequencePair {
            pos: (0..n).collect(),
            neg: (0..n).collect(),
        }
    }
}

/// Minimal-coordinate placement consistent with the pair's constraints.
pub fn decode(sp: &SequencePair, set: &RectSet) -> Result<Positioning, SolverError> {
    let n = set.len();
    if sp.len() != n {
        return Err(SolverError::SizeMismatch {
            pair: sp.len(),
            set: n,
        });
    }
    let mut rank_pos = vec![0usize; n];
    for (idx, &r) in sp.pos.iter().enumerate() {
        rank_pos[r] = idx;
    }

    let mut xs: Vec<Scalar> = vec![Scalar::zero(); n];
    let mut ys: Vec<Scalar> = vec![Scalar::zero(); n];
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    for &b in &sp.neg {
        let mut x = Scalar::zero();
        let mut y = Scalar::zero();
        for &a in &placed {
            if rank_pos[a] < rank_pos[b] {
                // `a` left of `b`
                let reach = &xs[a] + &set.rects[a].w;
                if reach > x {
                    x = reach;
                }
            } else {
                // `a` below `b`
                let reach = &ys[a] + &set.rects[a].l;
                if reach > y {
                    y = reach;
                }
            }
        }
        xs[b] = x;
        ys[b] = y;
        placed.push(b);
    }

    let origins = (0..n)
        .map(|i| Point::new(xs[i].clone(), ys[i].clone()))
        .collect();
    Ok(Positioning {
        set: set.clone(),
        origins,
    })
}

/// Topological sort by repeatedly taking the smallest-index source; `adj`
/// is a dense edge matrix. Errors if the graph has a cycle.
fn topo_min_index(n: usize, adj: &[Vec<bool>]) -> Result<Vec<usize>, SolverError> {
    let mut indegree = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if adj[i][j] {
                indegree[j] += 1;
            }
        }
    }
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n).find(|&v| !done[v] && indegree[v] == 0);
        let v = next.ok_or(SolverError::EncodeCycle)?;
        done[v] = true;
        order.push(v);
        for j in 0..n {
            if adj[v][j] {
                indegree[j] -= 1;
            }
        }
    }
    Ok(order)
}

/// Encodes a valid positioning into a sequence pair whose decode has extents
/// no larger than the original (after translation to the origin).
///
/// For each ordered pair let `L(i,j)` mean "i entirely left of j" and
/// `B(i,j)` "i entirely below j". The `neg` order must put `i` first iff the
/// pair reads as `L(i,j)` or `B(i,j)`; that direction is *forced* when the
/// reverse reading could assert a separation that does not hold. Formally:
///
/// * neg edge i->j  iff (L(i,j) or B(i,j)) and not L(j,i) and not B(j,i)
/// * pos edge i->j  iff (L(i,j) or B(j,i)) and not L(j,i) and not B(i,j)
///
/// Both forced relations are acyclic for valid positionings (a cycle would
/// chain separations into `x+ < x-` of the same rectangle), and any pair
/// left free by one of the orders reads as a true separation either way.
pub fn encode(p: &Positioning) -> Result<SequencePair, SolverError> {
    let n = p.len();
    if n == 0 {
        return Ok(SequencePair {
            pos: vec![],
            neg: vec![],
        });
    }
    let spans: Vec<_> = (0..n).map(|i| p.span(i)).collect();
    let left = |i: usize, j: usize| spans[i].1 <= spans[j].0;
    let below = |i: usize, j: usize| spans[i].3 <= spans[j].2;

    let mut neg_adj = vec![vec![false; n]; n];
    let mut pos_adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            neg_adj[i][j] = (left(i, j) || below(i, j)) && !left(j, i) && !below(j, i);
            pos_adj[i][j] = (left(i, j) || below(j, i)) && !left(j, i) && !below(i, j);
        }
    }
    let neg = topo_min_index(n, &neg_adj)?;
    let pos = topo_min_index(n, &pos_adj)?;
    Ok(SequencePair { pos, neg })
}
