use std::collections::HashSet;

use crate::error::{Error, Result};

/// Greedy sequence from 1 in which no `t` terms form an arithmetic
/// progression.
pub fn nap_sequence(t: usize, n: usize) -> Result<Vec<u64>> {
    if t < 3 {
        return Err(Error::Domain(format!("t must be ≥ 3, got {t}")));
    }
    let mut seq: Vec<u64> = Vec::with_capacity(n);
    let mut set = HashSet::with_capacity(n);
    let mut x = 0u64;
    while seq.len() < n {
        x += 1;
        if !closes_progression(&seq, &set, x, t) {
            seq.push(x);
            set.insert(x);
        }
    }
    Ok(seq)
}

// Would x be the largest term of a t-AP drawn from `set`?
fn closes_progression(seq: &[u64], set: &HashSet<u64>, x: u64, t: usize) -> bool {
    let steps = (t - 1) as u64;
    seq.iter().rev().any(|&a| {
        let d = x - a;
        d.checked_mul(steps).is_some_and(|span| span < x)
            && (2..=steps).all(|i| set.contains(&(x - i * d)))
    })
}
