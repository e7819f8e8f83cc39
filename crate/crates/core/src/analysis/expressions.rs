use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{Natural, PrimalityConfig, PrimalityVerdict};

/// x1^x2 + x2^x3 + … + xn^x1 for coprime (collectively) x_i > 1.
pub fn expression_cycle(xs: &[Natural]) -> Result<Natural> {
    if xs.len() < 2 {
        return Err(Error::Domain("need at least two terms".into()));
    }
    if xs.iter().any(|x| *x <= Natural::one()) {
        return Err(Error::Domain("every term must exceed 1".into()));
    }
    let g = xs.iter().fold(Natural::zero(), |g, x| g.gcd(x));
    if !g.is_one() {
        return Err(Error::Domain(format!("terms share the factor {g}")));
    }
    let mut sum = Natural::zero();
    for (i, x) in xs.iter().enumerate() {
        let e = xs[(i + 1) % xs.len()]
            .to_u32()
            .ok_or_else(|| Error::Domain("exponent too large".into()))?;
        sum += x.pow(e);
    }
    Ok(sum)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpressionHit {
    pub xs: Vec<u64>,
    pub value: Natural,
    pub verdict: PrimalityVerdict,
}

/// Every admissible tuple with entries in 2..=max_base whose expression is
/// prime or a probable prime, in lexicographic order.
pub fn expression_prime_search(
    max_base: u64,
    length: usize,
    cfg: &PrimalityConfig,
) -> Result<Vec<ExpressionHit>> {
    if max_base < 2 || length < 2 {
        return Err(Error::Domain("need max_base ≥ 2 and length ≥ 2".into()));
    }
    let span = max_base - 1;
    let total = span
        .checked_pow(length as u32)
        .filter(|&t| t <= 50_000_000)
        .ok_or_else(|| Error::Domain("search space too large".into()))?;
    let hits = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut xs = vec![0u64; length];
            for slot in xs.iter_mut().rev() {
                *slot = 2 + idx % span;
                idx /= span;
            }
            let big: Vec<Natural> = xs.iter().map(|&x| Natural::from(x)).collect();
            let value = expression_cycle(&big).ok()?;
            let verdict = cfg.check(&value);
            verdict
                .is_probably_prime()
                .then_some(ExpressionHit { xs, value, verdict })
        })
        .collect();
    Ok(hits)
}

/// Some multiset {k_i ≥ 2} with Π k_i! = n, listed in increasing order.
/// `Some(vec![])` for n = 1.
pub fn product_of_factorials(n: &Natural) -> Option<Vec<u64>> {
    if n.is_zero() {
        return None;
    }
    let mut facts = Vec::new();
    let (mut k, mut f) = (2u64, Natural::from(2u32));
    while f <= *n {
        facts.push((k, f.clone()));
        k += 1;
        f *= k;
    }
    let mut failed = HashMap::new();
    let mut out = descend(n, facts.len(), &facts, &mut failed)?;
    out.reverse();
    Some(out)
}

// Largest factorials first; `limit` bounds the index so the multiset comes
// out non-increasing and each one is visited once.
fn descend(
    n: &Natural,
    limit: usize,
    facts: &[(u64, Natural)],
    failed: &mut HashMap<Natural, usize>,
) -> Option<Vec<u64>> {
    if n.is_one() {
        return Some(Vec::new());
    }
    if failed.get(n).is_some_and(|&l| l >= limit) {
        return None;
    }
    for i in (0..limit).rev() {
        let (k, f) = &facts[i];
        if f > n {
            continue;
        }
        let (q, r) = n.div_rem(f);
        if r.is_zero() {
            if let Some(mut rest) = descend(&q, i + 1, facts, failed) {
                rest.insert(0, *k);
                return Some(rest);
            }
        }
    }
    failed.insert(n.clone(), limit);
    None
}
