use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    primes_up_to, s_prime_power_u64, smarandache_s, smarandache_s_u64, Natural, Rational,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SKind {
    /// 1/S(n)
    S1,
    /// S(n)/n
    S2,
    /// n/S(n)
    S3,
}

pub fn s_family(kind: SKind, n: &Natural) -> Result<Rational> {
    let min = if kind == SKind::S2 { 1u32 } else { 2 };
    if *n < Natural::from(min) {
        return Err(Error::Domain(format!("{kind:?} needs n ≥ {min}")));
    }
    let s: BigInt = smarandache_s(n)?.into();
    let n: BigInt = n.clone().into();
    Ok(match kind {
        SKind::S1 => Rational::new(BigInt::one(), s),
        SKind::S2 => Rational::new(s, n),
        SKind::S3 => Rational::new(n, s),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FsTheta {
    pub fs: Natural,
    pub theta: Natural,
    pub thetabar: Natural,
}

/// Sums of S(p^x) over the primes p ≤ x, split by whether p divides x.
pub fn fs_theta(x: u64) -> Result<FsTheta> {
    if x == 0 {
        return Err(Error::Domain("x must be ≥ 1".into()));
    }
    let (mut theta, mut thetabar) = (0u128, 0u128);
    for p in primes_up_to(x) {
        let s = s_prime_power_u64(p, x) as u128;
        if x.is_multiple_of(p) {
            theta += s;
        } else {
            thetabar += s;
        }
    }
    Ok(FsTheta {
        fs: Natural::from(theta + thetabar),
        theta: Natural::from(theta),
        thetabar: Natural::from(thetabar),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FunctionId {
    S1,
    S2,
    S3,
    Fs,
    Theta,
    ThetaBar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LipschitzProbe {
    pub max_diff: Rational,
    pub argmax: u64,
}

fn eval(f: FunctionId, n: u64) -> Result<Rational> {
    Ok(match f {
        FunctionId::S1 | FunctionId::S2 | FunctionId::S3 => {
            let s = smarandache_s_u64(n)?;
            let (num, den) = match f {
                FunctionId::S1 => (1, s),
                FunctionId::S2 => (s, n),
                _ => (n, s),
            };
            Rational::new(BigInt::from(num), BigInt::from(den))
        }
        FunctionId::Fs | FunctionId::Theta | FunctionId::ThetaBar => {
            let v = fs_theta(n)?;
            let pick = match f {
                FunctionId::Fs => v.fs,
                FunctionId::Theta => v.theta,
                _ => v.thetabar,
            };
            Rational::from_integer(pick.into())
        }
    })
}

/// Largest |f(n+1) − f(n)| for lo ≤ n < hi; the first maximiser wins.
pub fn lipschitz_probe(f: FunctionId, lo: u64, hi: u64) -> Result<LipschitzProbe> {
    if lo >= hi {
        return Err(Error::Domain(format!("need lo < hi, got {lo}..{hi}")));
    }
    let min = match f {
        FunctionId::S2 | FunctionId::Fs | FunctionId::Theta | FunctionId::ThetaBar => 1,
        FunctionId::S1 | FunctionId::S3 => 2,
    };
    if lo < min {
        return Err(Error::Domain(format!("{f:?} is defined from {min}")));
    }
    let mut prev = eval(f, lo)?;
    let mut best = LipschitzProbe {
        max_diff: Rational::zero(),
        argmax: lo,
    };
    for n in lo..hi {
        let next = eval(f, n + 1)?;
        let d = (&next - &prev).abs();
        if d > best.max_diff {
            best = LipschitzProbe {
                max_diff: d,
                argmax: n,
            };
        }
        prev = next;
    }
    Ok(best)
}
