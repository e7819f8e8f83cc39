use num_integer::Roots;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{Natural, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MetallicFamily {
    /// x² − n·x − 1 = 0
    A,
    /// x² − x − n = 0
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetallicSpec {
    pub family: MetallicFamily,
    pub n: u64,
}

/// A rational approximation p/q in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convergent {
    pub p: Natural,
    pub q: Natural,
}

impl Convergent {
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.p.clone().into(), self.q.clone().into())
    }

    /// Value of the defining quadratic at p/q, scaled by q²:
    /// A → p² − npq − q², B → p² − pq − nq².
    pub fn residual(&self, spec: &MetallicSpec) -> num_bigint::BigInt {
        let p: num_bigint::BigInt = self.p.clone().into();
        let q: num_bigint::BigInt = self.q.clone().into();
        let n = num_bigint::BigInt::from(spec.n);
        match spec.family {
            MetallicFamily::A => &p * &p - &n * &p * &q - &q * &q,
            MetallicFamily::B => &p * &p - &p * &q - &n * &q * &q,
        }
    }
}

/// Family A: convergents of the continued fraction [n; n, n, …].
/// Family B: iterates of x ↦ 1 + n/x, starting from ⌊root⌋.
pub fn metallic_convergents(spec: &MetallicSpec, count: usize) -> Result<Vec<Convergent>> {
    if spec.n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if count == 0 {
        return Err(Error::Domain("count must be ≥ 1".into()));
    }
    let n = Natural::from(spec.n);
    let mut out = Vec::with_capacity(count);
    match spec.family {
        MetallicFamily::A => {
            let (mut p0, mut q0) = (Natural::one(), Natural::zero());
            let (mut p1, mut q1) = (n.clone(), Natural::one());
            for _ in 0..count {
                out.push(Convergent {
                    p: p1.clone(),
                    q: q1.clone(),
                });
                let p2 = &n * &p1 + &p0;
                let q2 = &n * &q1 + &q0;
                p0 = std::mem::replace(&mut p1, p2);
                q0 = std::mem::replace(&mut q1, q2);
            }
        }
        MetallicFamily::B => {
            let disc = 1u128 + 4 * spec.n as u128;
            let x0 = disc.sqrt().div_ceil(2);
            let (mut p, mut q) = (Natural::from(x0), Natural::one());
            for _ in 0..count {
                out.push(Convergent {
                    p: p.clone(),
                    q: q.clone(),
                });
                // 1 + n/(p/q) = (p + nq)/p
                let np = &p + &n * &q;
                let g = num_integer::Integer::gcd(&np, &p);
                q = &p / &g;
                p = np / g;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(v: &[Convergent]) -> Vec<(u64, u64)> {
        v.iter()
            .map(|c| {
                (
                    c.p.to_u64_digits().first().copied().unwrap_or(0),
                    c.q.to_u64_digits()[0],
                )
            })
            .collect()
    }

    #[test]
    fn golden() {
        let a = metallic_convergents(
            &MetallicSpec {
                family: MetallicFamily::A,
                n: 1,
            },
            6,
        )
        .unwrap();
        assert_eq!(
            pairs(&a),
            vec![(1, 1), (2, 1), (3, 2), (5, 3), (8, 5), (13, 8)]
        );
        let b = metallic_convergents(
            &MetallicSpec {
                family: MetallicFamily::B,
                n: 1,
            },
            6,
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rational_root_is_stationary() {
        let spec = MetallicSpec {
            family: MetallicFamily::B,
            n: 2,
        };
        for c in metallic_convergents(&spec, 5).unwrap() {
            assert_eq!(
                (c.p.clone(), c.q.clone()),
                (Natural::from(2u32), Natural::one())
            );
            assert!(c.residual(&spec).is_zero());
        }
    }

    #[test]
    fn silver_error_shrinks() {
        let spec = MetallicSpec {
            family: MetallicFamily::A,
            n: 2,
        };
        let root = 1.0 + 2f64.sqrt();
        let errs: Vec<f64> = metallic_convergents(&spec, 10)
            .unwrap()
            .iter()
            .map(|c| {
                let v = c.p.to_u64_digits()[0] as f64 / c.q.to_u64_digits()[0] as f64;
                (v - root).abs()
            })
            .collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(metallic_convergents(
            &MetallicSpec {
                family: MetallicFamily::A,
                n: 0
            },
            3
        )
        .is_err());
        assert!(metallic_convergents(
            &MetallicSpec {
                family: MetallicFamily::A,
                n: 2
            },
            0
        )
        .is_err());
    }
}
