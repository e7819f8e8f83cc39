//! The Smarandache (Kempner) function S(n): least m with n | m!.

use num_traits::{One, ToPrimitive};

use super::factor::{factorize, factorize_u64, FactorConfig};
use super::primality::{is_prime, DEFAULT_ROUNDS};
use super::Natural;
use crate::error::{Error, Result};

/// Exponent of the prime `p` in `m!`.
pub fn legendre(m: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = m;
    while q >= p {
        q /= p;
        total += q;
    }
    total
}

/// v_p((p·k)!) = k + v_p(k!), valid for any prime p.
fn valuation_of_pk_factorial(p: &Natural, k: u64) -> u64 {
    match p.to_u64() {
        Some(p) => k + legendre(k, p),
        None => k, // p > k so k! has no factor p
    }
}

/// S(p^a): least m with p^a | m!. The answer is a multiple of p, found by
/// binary search over m = p·k with k in 1..=a.
pub fn smarandache_s_prime_power(p: &Natural, a: u64) -> Result<Natural> {
    if a == 0 {
        return Err(Error::Domain("exponent must be at least 1".into()));
    }
    if !is_prime(p, DEFAULT_ROUNDS).is_probably_prime() {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    Ok(p * prime_power_multiplier(p, a))
}

fn prime_power_multiplier(p: &Natural, a: u64) -> u64 {
    let (mut lo, mut hi) = (1u64, a);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if valuation_of_pk_factorial(p, mid) >= a {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

pub(crate) fn s_prime_power_u64(p: u64, a: u64) -> u64 {
    p * prime_power_multiplier(&Natural::from(p), a)
}

/// S(n) with the convention S(1) = 1.
pub fn smarandache_s(n: &Natural) -> Result<Natural> {
    if let Some(small) = n.to_u64() {
        return smarandache_s_u64(small).map(Natural::from);
    }
    let f = factorize(n, &FactorConfig::default())?;
    if !f.is_complete() {
        return Err(Error::Domain(format!(
            "factorization of {n} exceeded the rho budget"
        )));
    }
    let mut best = Natural::one();
    for (p, &e) in &f.factors {
        let s = p * prime_power_multiplier(p, e as u64);
        if s > best {
            best = s;
        }
    }
    Ok(best)
}

pub fn smarandache_s_u64(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("S(0) is undefined".into()));
    }
    Ok(factorize_u64(n)
        .into_iter()
        .map(|(p, e)| s_prime_power_u64(p, e as u64))
        .max()
        .unwrap_or(1))
}
