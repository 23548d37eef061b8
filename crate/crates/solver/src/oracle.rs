//! Brute-force reference for tiny instances.
//!
//! Enumerates every one of the `(n!)^2` sequence pairs, decodes each, and
//! takes the exact minimum bounding area. No pruning, no symmetry breaking,
//! no shared code with the branch-and-bound beyond `decode` itself — this is
//! the ground truth the solver is tested against.

use packbound_core::{RectSet, Scalar};

use crate::error::SolverError;
use crate::sequence_pair::{decode, SequencePair};

pub const ORACLE_MAX_N: usize = 5;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, arr: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(arr.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, out);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out
}

/// Exact `T0` by exhaustive enumeration. `n <= 5` only.
pub fn oracle_min_area(set: &RectSet) -> Result<Scalar, SolverError> {
    let n = set.len();
    if n == 0 {
        return Err(SolverError::EmptySet);
    }
    if n > ORACLE_MAX_N {
        return Err(SolverError::OracleTooLarge {
            n,
            max: ORACLE_MAX_N,
        });
    }
    let perms = permutations(n);
    let mut best: Option<Scalar> = None;
    for pos in &perms {
        for neg in &perms {
            let sp = SequencePair {
                pos: pos.clone(),
                neg: neg.clone(),
            };
            let t = decode(&sp, set)?.measures()?.t;
            if best.as_ref().is_none_or(|b| t < *b) {
                best = Some(t);
            }
        }
    }
    Ok(best.expect("non-empty instance"))
}
