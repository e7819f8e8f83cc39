use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::map::MapSpec;
use crate::error::Result;
use crate::numerics::DigitString;

/// Transient plus cycle of one start value.
///
/// `tail_len` counts map applications before the orbit first sits on a
/// cycle member, so `steps[tail_len]` is the cycle entry point. The cycle
/// is rotated to start at its smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub map: MapSpec,
    pub start: DigitString,
    pub steps: Vec<u64>,
    pub tail_len: usize,
    pub cycle: Vec<u64>,
    pub terminated_zero: bool,
}

impl OrbitReport {
    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    /// Applications until the orbit first produces a value it has seen.
    pub fn closure_len(&self) -> usize {
        self.tail_len + self.cycle.len()
    }

    /// 1-based position of the first repeated term when the orbit is
    /// written out from the start value.
    pub fn repeat_index(&self) -> usize {
        self.closure_len() + 1
    }

    pub fn reaches_zero(&self) -> bool {
        self.cycle == [0]
    }
}

pub fn canonical_cycle(cycle: &[u64]) -> Vec<u64> {
    let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
    else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(cycle.len());
    out.extend_from_slice(&cycle[pos..]);
    out.extend_from_slice(&cycle[..pos]);
    out
}

pub fn orbit(m: &MapSpec, start: &DigitString) -> Result<OrbitReport> {
    if start.width() != m.width() {
        return Err(crate::Error::Domain(format!(
            "start has width {}, map expects {}",
            start.width(),
            m.width()
        )));
    }
    let v0 = start.value();
    m.check_value(v0)?;
    let mut visited = Visited::for_map(m);
    let (steps, tail_len, terminated_zero) = walk(m, v0, &mut visited);
    let cycle = canonical_cycle(&steps[tail_len..]);
    Ok(OrbitReport {
        map: *m,
        start: start.clone(),
        steps,
        tail_len,
        cycle,
        terminated_zero,
    })
}

/// First-visit index of every value on the current orbit.
pub(crate) enum Visited {
    Dense {
        epoch: u32,
        mark: Vec<u32>,
        index: Vec<u32>,
    },
    Sparse(HashMap<u64, usize>),
}

const DENSE_LIMIT: u64 = 2_000_000;

impl Visited {
    pub(crate) fn for_map(m: &MapSpec) -> Self {
        let (_, hi) = m.value_bounds();
        if hi < DENSE_LIMIT {
            let n = hi as usize + 1;
            Visited::Dense {
                epoch: 0,
                mark: vec![0; n],
                index: vec![0; n],
            }
        } else {
            Visited::Sparse(HashMap::new())
        }
    }

    fn reset(&mut self) {
        match self {
            Visited::Dense { epoch, mark, .. } => {
                *epoch = epoch.wrapping_add(1);
                if *epoch == 0 {
                    mark.iter_mut().for_each(|x| *x = 0);
                    *epoch = 1;
                }
            }
            Visited::Sparse(map) => map.clear(),
        }
    }

    fn get(&self, v: u64) -> Option<usize> {
        match self {
            Visited::Dense { epoch, mark, index } => {
                (mark[v as usize] == *epoch).then(|| index[v as usize] as usize)
            }
            Visited::Sparse(map) => map.get(&v).copied(),
        }
    }

    fn insert(&mut self, v: u64, i: usize) {
        match self {
            Visited::Dense { epoch, mark, index } => {
                mark[v as usize] = *epoch;
                index[v as usize] = i as u32;
            }
            Visited::Sparse(map) => {
                map.insert(v, i);
            }
        }
    }
}

/// Iterates until a value repeats (or subtract-const hits 0). Returns the
/// visited values, the tail length and the zero-termination flag.
pub(crate) fn walk(m: &MapSpec, v0: u64, visited: &mut Visited) -> (Vec<u64>, usize, bool) {
    visited.reset();
    let mut steps = Vec::new();
    let mut v = v0;
    loop {
        if let Some(first) = visited.get(v) {
            return (steps, first, false);
        }
        visited.insert(v, steps.len());
        steps.push(v);
        if m.is_terminal(v) {
            let tail = steps.len() - 1;
            return (steps, tail, true);
        }
        v = m.apply(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: u64, w: usize) -> DigitString {
        DigitString::from_value(v, w).unwrap()
    }

    #[test]
    fn mixed_compose_eighteen_cycle() {
        let r = orbit(&MapSpec::mixed_compose(), &ds(75, 2)).unwrap();
        assert_eq!(r.tail_len, 0);
        assert_eq!(
            r.steps,
            vec![75, 32, 51, 64, 12, 31, 42, 62, 84, 34, 71, 86, 52, 73, 14, 53, 82, 16]
        );
        assert_eq!(r.cycle.len(), 18);
        assert_eq!(r.cycle[0], 12);
    }

    #[test]
    fn two_digit_reverse_subtract() {
        let r = orbit(&MapSpec::reverse_subtract(2).unwrap(), &ds(91, 2)).unwrap();
        assert_eq!(r.cycle, vec![9, 81, 63, 27, 45]);
        assert!(r.tail_len <= 2);
    }

    #[test]
    fn palindrome_reaches_zero() {
        let r = orbit(&MapSpec::reverse_subtract(3).unwrap(), &ds(121, 3)).unwrap();
        assert_eq!(r.tail_len, 1);
        assert_eq!(r.cycle, vec![0]);
        assert!(r.reaches_zero());
        assert!(!r.terminated_zero);
    }

    #[test]
    fn subtract_const_orbit_of_52() {
        let r = orbit(&MapSpec::subtract_const(2, 1).unwrap(), &ds(52, 2)).unwrap();
        assert_eq!(r.tail_len, 0);
        assert_eq!(r.cycle_len(), 18);
        assert_eq!(r.closure_len(), 18);
        assert_eq!(
            r.steps,
            vec![52, 24, 41, 13, 30, 2, 19, 90, 8, 79, 96, 68, 85, 57, 74, 46, 63, 35]
        );
    }

    #[test]
    fn subtract_const_terminal_zero() {
        let r = orbit(&MapSpec::subtract_const(2, 1).unwrap(), &ds(10, 2)).unwrap();
        assert!(r.terminated_zero);
        assert_eq!(r.cycle, vec![0]);
        assert_eq!(*r.steps.last().unwrap(), 0);
        assert_eq!(r.steps[r.tail_len], 0);
    }

    #[test]
    fn digit_multiply_68() {
        let r = orbit(&MapSpec::digit_multiply(2, 7).unwrap(), &ds(68, 2)).unwrap();
        assert_eq!(r.tail_len, 0);
        assert_eq!(r.cycle, vec![26, 42, 84, 68]);
    }

    #[test]
    fn sparse_and_dense_agree() {
        let m = MapSpec::reverse_subtract(7).unwrap();
        let mut dense = Visited::Dense {
            epoch: 0,
            mark: vec![0; 10_000_000],
            index: vec![0; 10_000_000],
        };
        let mut sparse = Visited::Sparse(HashMap::new());
        for v in [1_000_000u64, 1_234_567, 9_876_543, 1_000_720] {
            assert_eq!(walk(&m, v, &mut dense), walk(&m, v, &mut sparse));
        }
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(canonical_cycle(&[42, 84, 68, 26]), vec![26, 42, 84, 68]);
        assert_eq!(canonical_cycle(&[0]), vec![0]);
        assert!(canonical_cycle(&[]).is_empty());
    }
}
