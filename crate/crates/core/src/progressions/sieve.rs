use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How pass k (k = 2, 3, …) thins the current survivor list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SieveSchedule {
    /// Keep k survivors, delete the next one, repeat.
    #[default]
    KeepKDropOne,
    /// Keep k survivors, delete the next k + 1, repeat.
    KeepKSkipBlock,
}

impl SieveSchedule {
    fn period(self, k: usize) -> usize {
        match self {
            SieveSchedule::KeepKDropOne => k + 1,
            SieveSchedule::KeepKSkipBlock => 2 * k + 1,
        }
    }
}

// Largest prefix of the naturals we are willing to sieve.
const MAX_PREFIX: u64 = 1 << 24;

/// First `n` survivors of the sieve.
///
/// A pass only looks at positions, so sieving the prefix 1..=len gives an
/// exact prefix of the infinite result once k reaches the survivor count;
/// the prefix is doubled until it yields enough terms.
pub fn nary_sieve(n: usize, schedule: SieveSchedule) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Domain("n must be ≥ 1".into()));
    }
    let mut len = 16u64.max(2 * n as u64);
    loop {
        let mut s: Vec<u64> = (1..=len).collect();
        let mut k = 2;
        while k < s.len() {
            let period = schedule.period(k);
            let mut i = 0;
            s.retain(|_| {
                let keep = i % period < k;
                i += 1;
                keep
            });
            k += 1;
        }
        if s.len() >= n {
            s.truncate(n);
            return Ok(s);
        }
        if len >= MAX_PREFIX {
            return Err(Error::GeneratorExhausted {
                available: s.len(),
                requested: n,
            });
        }
        len = (2 * len).min(MAX_PREFIX);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_prefix() {
        assert_eq!(nary_sieve(2, SieveSchedule::default()).unwrap(), vec![1, 2]);
        assert_eq!(
            nary_sieve(8, SieveSchedule::KeepKDropOne).unwrap(),
            vec![1, 2, 4, 7, 10, 14, 20, 25]
        );
    }

    #[test]
    fn block_schedule_runs_out() {
        // survivors thin out geometrically, so the prefix cap is hit quickly
        assert!(matches!(
            nary_sieve(40, SieveSchedule::KeepKSkipBlock),
            Err(Error::GeneratorExhausted { .. })
        ));
    }

    #[test]
    fn block_schedule_starts_with_one_two() {
        let v = nary_sieve(5, SieveSchedule::KeepKSkipBlock).unwrap();
        assert_eq!(&v[..2], &[1, 2]);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn prefix_stable() {
        for (sched, len) in [
            (SieveSchedule::KeepKDropOne, 40),
            (SieveSchedule::KeepKSkipBlock, 12),
        ] {
            let long = nary_sieve(len, sched).unwrap();
            for n in 1..len {
                assert_eq!(nary_sieve(n, sched).unwrap(), long[..n]);
            }
        }
    }
}
