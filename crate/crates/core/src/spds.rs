//! Squares whose decimal rendering splits into two or more square segments.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{nth_root_exact, Natural};

/// Segments of a split; concatenated they give back the original rendering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SegmentPartition {
    pub segments: Vec<String>,
}

impl SegmentPartition {
    pub fn joined(&self) -> String {
        self.segments.concat()
    }
}

/// "0" or no leading zero, and an exact square.
fn is_square_segment(seg: &str) -> bool {
    if seg == "0" {
        return true;
    }
    if seg.starts_with('0') {
        return false;
    }
    let v: Natural = seg.parse().expect("digit-only segment");
    nth_root_exact(&v, 2).is_some()
}

/// All splits of `n` into at least two square segments, depth-first, in
/// lexicographic order of segment lengths.
pub fn square_partitions(n: &Natural) -> Vec<SegmentPartition> {
    let s = n.to_str_radix(10);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    segment(&s, 0, &mut cur, &mut out, false);
    out
}

/// Same search, stopping at the first hit.
fn has_square_partition(s: &str) -> bool {
    let mut out = Vec::new();
    segment(s, 0, &mut Vec::new(), &mut out, true);
    !out.is_empty()
}

fn segment(
    s: &str,
    pos: usize,
    cur: &mut Vec<String>,
    out: &mut Vec<SegmentPartition>,
    first_only: bool,
) {
    if pos == s.len() {
        if cur.len() >= 2 {
            out.push(SegmentPartition {
                segments: cur.clone(),
            });
        }
        return;
    }
    for end in pos + 1..=s.len() {
        // a single segment spanning everything is not a partition
        if pos == 0 && end == s.len() {
            break;
        }
        let seg = &s[pos..end];
        if seg.len() > 1 && seg.starts_with('0') {
            break;
        }
        if is_square_segment(seg) {
            cur.push(seg.to_string());
            segment(s, end, cur, out, first_only);
            cur.pop();
            if first_only && !out.is_empty() {
                return;
            }
        }
    }
}

/// Whether m² splits into square segments.
pub fn is_spds_member(m: &Natural) -> Result<bool> {
    if *m == Natural::from(0u32) {
        return Err(Error::Domain("root must be at least 1".into()));
    }
    Ok(has_square_partition(&(m * m).to_str_radix(10)))
}

fn member_u64(m: u64) -> bool {
    let sq = m as u128 * m as u128;
    has_square_partition(&sq.to_string())
}

/// Members m² with 1 <= m <= root_limit, increasing.
pub fn spds_enumerate(root_limit: u64) -> Result<Vec<Natural>> {
    if root_limit == 0 {
        return Err(Error::Domain("root limit must be at least 1".into()));
    }
    Ok(member_roots(root_limit)
        .into_iter()
        .map(|m| Natural::from(m) * m)
        .collect())
}

fn member_roots(root_limit: u64) -> Vec<u64> {
    (1..=root_limit)
        .into_par_iter()
        .filter(|&m| member_u64(m))
        .collect()
}

/// Maximal runs of consecutive member roots, as (first root, length >= 2).
pub fn consecutive_spds_runs(root_limit: u64) -> Result<Vec<(u64, usize)>> {
    if root_limit < 2 {
        return Err(Error::Domain("root limit must be at least 2".into()));
    }
    let roots = member_roots(root_limit);
    let mut runs = Vec::new();
    let mut i = 0;
    while i < roots.len() {
        let mut j = i;
        while j + 1 < roots.len() && roots[j + 1] == roots[j] + 1 {
            j += 1;
        }
        if j > i {
            runs.push((roots[i], j - i + 1));
        }
        i = j + 1;
    }
    Ok(runs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerChain {
    /// m is itself a square with a valid split
    pub m: bool,
    pub m_squared: bool,
    pub m_fourth: bool,
}

/// Membership of m, m² and m⁴, each as "a square admitting a split".
pub fn power_chain_check(m: &Natural) -> Result<PowerChain> {
    if *m == Natural::from(0u32) {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let m2 = m * m;
    let m4 = &m2 * &m2;
    let m_flag = nth_root_exact(m, 2).is_some() && has_square_partition(&m.to_str_radix(10));
    Ok(PowerChain {
        m: m_flag,
        m_squared: has_square_partition(&m2.to_str_radix(10)),
        m_fourth: has_square_partition(&m4.to_str_radix(10)),
    })
}

/// Members up to root_limit² whose rendering contains `pattern`.
pub fn pattern_search(pattern: &str, root_limit: u64) -> Result<Vec<Natural>> {
    if pattern.is_empty() || !pattern.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Domain(format!("bad digit pattern {pattern:?}")));
    }
    Ok(spds_enumerate(root_limit)?
        .into_iter()
        .filter(|v| v.to_str_radix(10).contains(pattern))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn segs(p: &[&str]) -> SegmentPartition {
        SegmentPartition {
            segments: p.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn partition_examples() {
        assert!(square_partitions(&n(256036)).contains(&segs(&["256", "0", "36"])));
        assert!(square_partitions(&n(169)).contains(&segs(&["16", "9"])));
        assert!(square_partitions(&n(15)).is_empty());
        assert!(square_partitions(&n(194481)).contains(&segs(&["1", "9", "4", "4", "81"])));
    }

    #[test]
    fn leading_zero_segments_rejected() {
        // 1009 would split as 100/9 or 1/0/09; "09" is not allowed
        let parts = square_partitions(&n(1009));
        assert!(parts.contains(&segs(&["100", "9"])));
        assert!(parts
            .iter()
            .all(|p| p.segments.iter().all(|s| s == "0" || !s.starts_with('0'))));
        assert!(!parts.contains(&segs(&["1", "0", "09"])));
    }

    #[test]
    fn membership_examples() {
        assert!(is_spds_member(&n(12)).unwrap());
        assert!(is_spds_member(&n(441)).unwrap());
        assert!(!is_spds_member(&n(2)).unwrap());
        assert!(is_spds_member(&n(0)).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let upto13 = spds_enumerate(13).unwrap();
        assert!(upto13.contains(&n(144)) && upto13.contains(&n(169)));
        assert!(spds_enumerate(506).unwrap().contains(&n(256036)));
        assert!(spds_enumerate(1).unwrap().is_empty());
    }

    #[test]
    fn runs_include_twelve() {
        let runs = consecutive_spds_runs(20).unwrap();
        assert!(runs.iter().any(|&(s, len)| s <= 12 && s + len as u64 > 13));
        let runs = consecutive_spds_runs(11).unwrap();
        assert!(runs.iter().all(|&(s, len)| s + len as u64 - 1 < 12));
    }

    #[test]
    fn power_chain_examples() {
        let c = power_chain_check(&n(441)).unwrap();
        assert!(c.m && c.m_squared);
        assert!(!power_chain_check(&n(4)).unwrap().m);
        assert!(power_chain_check(&n(144)).unwrap().m);
    }

    #[test]
    fn pattern_examples() {
        assert!(pattern_search("0", 506).unwrap().contains(&n(256036)));
        assert!(pattern_search("999999", 50).unwrap().is_empty());
        let hits = pattern_search("44", 441).unwrap();
        assert!(hits.contains(&n(144)));
        // "194481" contains "44" as well
        assert!(hits.contains(&n(194481)));
        assert!(pattern_search("", 10).is_err());
    }
}
