//! Add-on (concatenation) sequences and the scans run over them.

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    concat_decimal, digit_count, is_perfect_power, is_prime_u64, Natural, PrimalityConfig,
    PrimalityKind,
};

/// The ordered generator set G whose terms are glued together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family", content = "terms")]
pub enum GeneratorSpec {
    Odd,
    Even,
    Prime,
    Custom(Vec<Natural>),
}

impl GeneratorSpec {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorSpec::Odd => "odd",
            GeneratorSpec::Even => "even",
            GeneratorSpec::Prime => "prime",
            GeneratorSpec::Custom(_) => "custom",
        }
    }

    /// First `count` generator terms g_1 < g_2 < …
    pub fn terms(&self, count: usize) -> Result<Vec<Natural>> {
        Ok(match self {
            GeneratorSpec::Odd => (0..count as u64)
                .map(|i| Natural::from(2 * i + 1))
                .collect(),
            GeneratorSpec::Even => (1..=count as u64).map(|i| Natural::from(2 * i)).collect(),
            GeneratorSpec::Prime => (2u64..)
                .filter(|&v| is_prime_u64(v))
                .take(count)
                .map(Natural::from)
                .collect(),
            GeneratorSpec::Custom(terms) => {
                if terms.len() < count {
                    return Err(Error::GeneratorExhausted {
                        available: terms.len(),
                        requested: count,
                    });
                }
                terms[..count].to_vec()
            }
        })
    }
}

/// a_1 = g_1, a_i = a_{i-1} ‖ g_i.
pub fn g_addon(g: &GeneratorSpec, count: usize) -> Result<Vec<Natural>> {
    if count == 0 {
        return Err(Error::Domain("count must be at least 1".into()));
    }
    concat_stream(&g.terms(count)?)
}

/// Running concatenations s_1, s_1 s_2, s_1 s_2 s_3, …
pub fn concat_stream(s: &[Natural]) -> Result<Vec<Natural>> {
    if s.is_empty() {
        return Err(Error::Domain("sequence must be non-empty".into()));
    }
    let mut out = Vec::with_capacity(s.len());
    let mut acc: Option<Natural> = None;
    for term in s {
        let next = match &acc {
            None => term.clone(),
            Some(a) => concat_decimal(a, term),
        };
        out.push(next.clone());
        acc = Some(next);
    }
    Ok(out)
}

/// Digits of a_rank, computed from generator lengths without building the term.
pub fn term_digit_count(g: &GeneratorSpec, rank: usize) -> Result<usize> {
    if rank == 0 {
        return Err(Error::Domain("ranks start at 1".into()));
    }
    Ok(g.terms(rank)?.iter().map(digit_count).sum())
}

/// For each running concatenation, whether `member` accepts it.
pub fn membership_scan<F>(s: &[Natural], member: F) -> Result<Vec<(usize, bool)>>
where
    F: Fn(&Natural) -> bool,
{
    Ok(concat_stream(s)?
        .iter()
        .enumerate()
        .map(|(i, v)| (i + 1, member(v)))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum HitClass {
    Prime,
    ProbablePrime,
    PerfectPower {
        base: Natural,
        exponent: u32,
    },
    /// term = 2·q with q prime or probable prime
    TwoP {
        q_kind: PrimalityKind,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanHit {
    pub rank: usize,
    pub digits: usize,
    pub class: HitClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub family: GeneratorSpec,
    pub limit: usize,
    pub hits: Vec<ScanHit>,
}

impl ScanReport {
    pub fn ranks(&self) -> Vec<usize> {
        self.hits.iter().map(|h| h.rank).collect()
    }
}

/// Ranks i <= limit whose add-on term is prime or probable prime. Ranks are
/// tested in parallel; the report is in rank order regardless.
pub fn prime_rank_scan(
    g: &GeneratorSpec,
    limit: usize,
    cfg: &PrimalityConfig,
) -> Result<ScanReport> {
    let terms = g_addon(g, limit)?;
    let hits = terms
        .par_iter()
        .enumerate()
        .filter_map(|(i, t)| {
            let v = cfg.check(t);
            let class = match v.kind {
                PrimalityKind::Prime => HitClass::Prime,
                PrimalityKind::ProbablePrime => HitClass::ProbablePrime,
                PrimalityKind::Composite => return None,
            };
            Some(ScanHit {
                rank: i + 1,
                digits: digit_count(t),
                class,
            })
        })
        .collect();
    Ok(ScanReport {
        family: g.clone(),
        limit,
        hits,
    })
}

/// Perfect-power and 2p hits among the first `limit` even add-on terms.
pub fn power_and_2p_scan(limit: usize, cfg: &PrimalityConfig) -> Result<ScanReport> {
    let terms = g_addon(&GeneratorSpec::Even, limit)?;
    let hits: Vec<Vec<ScanHit>> = terms
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let mut found = Vec::new();
            let digits = digit_count(t);
            if let Some((base, exponent)) = is_perfect_power(t) {
                found.push(ScanHit {
                    rank: i + 1,
                    digits,
                    class: HitClass::PerfectPower { base, exponent },
                });
            }
            let q: Natural = t >> 1u32;
            if (&q << 1u32) == *t && !q.is_one() {
                let v = cfg.check(&q);
                if v.is_probably_prime() {
                    found.push(ScanHit {
                        rank: i + 1,
                        digits,
                        class: HitClass::TwoP { q_kind: v.kind },
                    });
                }
            }
            found
        })
        .collect();
    Ok(ScanReport {
        family: GeneratorSpec::Even,
        limit,
        hits: hits.into_iter().flatten().collect(),
    })
}

/// The first `count` primes whose decimal digits all lie in {2, 3, 5, 7}.
///
/// Candidates are enumerated as digit strings over {2,3,5,7}, shortest
/// first and lexicographically within a length, which is increasing order.
pub fn prime_digital_stream(count: usize) -> Result<Vec<Natural>> {
    if count == 0 {
        return Err(Error::Domain("count must be at least 1".into()));
    }
    const DIGITS: [u64; 4] = [2, 3, 5, 7];
    let cfg = PrimalityConfig::default();
    let mut out = Vec::with_capacity(count);
    let mut layer: Vec<Natural> = vec![Natural::from(0u32)];
    loop {
        let mut next = Vec::with_capacity(layer.len() * 4);
        for prefix in &layer {
            for d in DIGITS {
                let v: Natural = prefix * 10u32 + d;
                if cfg.check(&v).is_probably_prime() {
                    out.push(v.clone());
                    if out.len() == count {
                        return Ok(out);
                    }
                }
                next.push(v);
            }
        }
        layer = next;
    }
}
