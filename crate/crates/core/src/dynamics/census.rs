use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::map::MapSpec;
use super::orbit::{canonical_cycle, walk, Visited};
use crate::error::{Error, Result};

/// Starts per work unit. Fixed so that the merge tree does not depend on
/// the thread count.
const CHUNK: u64 = 8192;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleClass {
    pub cycle: Vec<u64>,
    pub members: u64,
    pub max_tail: usize,
    pub max_tail_start: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domain {
    pub lo: u64,
    pub hi: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub map: MapSpec,
    pub domain: Domain,
    pub total: u64,
    pub zero_count: u64,
    /// Longest tail among the starts that reach 0 (None if there are none).
    pub zero_max_tail: Option<usize>,
    pub zero_max_tail_start: Option<u64>,
    /// Non-zero cycles, sorted by their minimum element.
    pub classes: Vec<CycleClass>,
}

impl CensusReport {
    pub fn member_total(&self) -> u64 {
        self.classes.iter().map(|c| c.members).sum()
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.classes.iter().map(|c| c.cycle.len()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Largest structural tail over non-zero classes, ties to the smallest start.
    pub fn max_tail(&self) -> Option<(usize, u64)> {
        best(self.classes.iter().map(|c| (c.max_tail, c.max_tail_start)))
    }

    /// Longest orbit written out until its first repeated term
    /// (tail + cycle + 1), over the whole domain including zero-reaching
    /// starts. Returns (length, start).
    pub fn longest_transient(&self) -> Option<(usize, u64)> {
        let zero = self
            .zero_max_tail
            .zip(self.zero_max_tail_start)
            .map(|(t, s)| (t + 2, s));
        best(
            self.classes
                .iter()
                .map(|c| (c.max_tail + c.cycle.len() + 1, c.max_tail_start))
                .chain(zero),
        )
    }

    pub fn class_of(&self, cycle: &[u64]) -> Option<&CycleClass> {
        let canon = canonical_cycle(cycle);
        self.classes.iter().find(|c| c.cycle == canon)
    }
}

fn best(it: impl Iterator<Item = (usize, u64)>) -> Option<(usize, u64)> {
    it.fold(None, |acc, (t, s)| match acc {
        Some((bt, bs)) if bt > t || (bt == t && bs <= s) => Some((bt, bs)),
        _ => Some((t, s)),
    })
}

#[derive(Default, Clone)]
struct Partial {
    zero_count: u64,
    zero_best: Option<(usize, u64)>,
    classes: BTreeMap<Vec<u64>, (u64, usize, u64)>,
}

fn take_better(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

impl Partial {
    fn add(&mut self, cycle: Vec<u64>, tail: usize, start: u64) {
        if cycle == [0] {
            self.zero_count += 1;
            self.zero_best = Some(match self.zero_best {
                Some(b) => take_better(b, (tail, start)),
                None => (tail, start),
            });
            return;
        }
        let e = self.classes.entry(cycle).or_insert((0, tail, start));
        e.0 += 1;
        let (t, s) = take_better((e.1, e.2), (tail, start));
        e.1 = t;
        e.2 = s;
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.zero_count += other.zero_count;
        self.zero_best = match (self.zero_best, other.zero_best) {
            (Some(a), Some(b)) => Some(take_better(a, b)),
            (a, b) => a.or(b),
        };
        for (cycle, (n, t, s)) in other.classes {
            match self.classes.get_mut(&cycle) {
                Some(e) => {
                    e.0 += n;
                    let (bt, bs) = take_better((e.1, e.2), (t, s));
                    e.1 = bt;
                    e.2 = bs;
                }
                None => {
                    self.classes.insert(cycle, (n, t, s));
                }
            }
        }
        self
    }
}

fn sweep(m: &MapSpec, lo: u64, hi: u64) -> Partial {
    let mut visited = Visited::for_map(m);
    let mut p = Partial::default();
    for v in lo..=hi {
        let (steps, tail, _) = walk(m, v, &mut visited);
        p.add(canonical_cycle(&steps[tail..]), tail, v);
    }
    p
}

fn validate(m: &MapSpec, lo: u64, hi: u64) -> Result<()> {
    if lo > hi {
        return Err(Error::Domain(format!("empty range {lo}..{hi}")));
    }
    m.check_value(lo)?;
    m.check_value(hi)
}

fn finish(m: &MapSpec, lo: u64, hi: u64, p: Partial) -> CensusReport {
    let classes = p
        .classes
        .into_iter()
        .map(|(cycle, (members, max_tail, max_tail_start))| CycleClass {
            cycle,
            members,
            max_tail,
            max_tail_start,
        })
        .collect();
    CensusReport {
        map: *m,
        domain: Domain { lo, hi },
        total: hi - lo + 1,
        zero_count: p.zero_count,
        zero_max_tail: p.zero_best.map(|b| b.0),
        zero_max_tail_start: p.zero_best.map(|b| b.1),
        classes,
    }
}

/// Orbits every start in `lo..=hi` on the global rayon pool.
pub fn census(m: &MapSpec, lo: u64, hi: u64) -> Result<CensusReport> {
    validate(m, lo, hi)?;
    let chunks = (hi - lo) / CHUNK + 1;
    let p = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let a = lo + i * CHUNK;
            let b = (a + CHUNK - 1).min(hi);
            sweep(m, a, b)
        })
        .reduce(Partial::default, Partial::merge);
    Ok(finish(m, lo, hi, p))
}

/// Same as [`census`] on a dedicated pool with `jobs` threads; `jobs == 1`
/// runs a plain sequential sweep.
pub fn census_with_jobs(m: &MapSpec, lo: u64, hi: u64, jobs: usize) -> Result<CensusReport> {
    validate(m, lo, hi)?;
    if jobs <= 1 {
        return Ok(finish(m, lo, hi, sweep(m, lo, hi)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    pool.install(|| census(m, lo, hi))
}
