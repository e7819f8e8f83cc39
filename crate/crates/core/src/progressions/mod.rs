//! Progression-free sequences, survivor sieves, P(n) = S(n) numbers and
//! power-sum representation counts.

mod nap;
mod sieve;

pub use nap::nap_sequence;
pub use sieve::{nary_sieve, SieveSchedule};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{factorize_u64, smarandache_s_u64, Natural};

/// All 2 ≤ n ≤ limit whose largest prime factor equals S(n).
pub fn erdos_smarandache(limit: u64) -> Result<Vec<u64>> {
    if limit < 2 {
        return Err(Error::Domain(format!("limit must be ≥ 2, got {limit}")));
    }
    (2..=limit)
        .into_par_iter()
        .map(|n| {
            let p = factorize_u64(n).last().map(|&(p, _)| p).unwrap_or(1);
            Ok((p == smarandache_s_u64(n)?).then_some(n))
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

/// Number of multisets of positive m-th powers summing to n, with exactly
/// `parts` summands or any number of them.
pub fn representation_count(n: u64, parts: Option<usize>, m: u32) -> Result<Natural> {
    if n == 0 {
        return Err(Error::Domain("n must be ≥ 1".into()));
    }
    if m < 2 {
        return Err(Error::Domain(format!("power must be ≥ 2, got {m}")));
    }
    let n = usize::try_from(n).map_err(|_| Error::Domain("n too large".into()))?;
    let powers: Vec<usize> = (1usize..)
        .map(|b| b.checked_pow(m))
        .take_while(|p| p.is_some_and(|p| p <= n))
        .flatten()
        .collect();

    match parts {
        None => {
            // classic coin-change over the powers
            let mut dp = vec![Natural::zero(); n + 1];
            dp[0] = Natural::one();
            for &p in &powers {
                for s in p..=n {
                    let add = dp[s - p].clone();
                    dp[s] += add;
                }
            }
            Ok(dp.swap_remove(n))
        }
        Some(k) => {
            if k == 0 || k > n {
                return Ok(Natural::zero());
            }
            // dp[j][s]: multisets of j parts summing to s
            let mut dp = vec![vec![Natural::zero(); n + 1]; k + 1];
            dp[0][0] = Natural::one();
            for &p in &powers {
                for j in 1..=k {
                    for s in p..=n {
                        let add = dp[j - 1][s - p].clone();
                        dp[j][s] += add;
                    }
                }
            }
            Ok(std::mem::take(&mut dp[k][n]))
        }
    }
}
