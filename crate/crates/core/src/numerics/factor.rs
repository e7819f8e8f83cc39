//! Integer factorization: trial division, then Pollard–Brent rho.

use std::collections::BTreeMap;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::primality::{
    gcd_u64, is_prime_u64, is_prime_with, mul_mod as mul_mod_u64, DEFAULT_ROUNDS,
};
use super::Natural;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    pub trial_limit: u32,
    /// Total rho iterations allowed across all cofactors of one input.
    pub rho_budget: u64,
    pub rounds: u32,
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        Self {
            trial_limit: 10_000,
            rho_budget: 20_000_000,
            rounds: DEFAULT_ROUNDS,
            seed: 0xfac7,
        }
    }
}

/// Prime-power decomposition. When the rho budget runs out, `unfactored`
/// holds the composite cofactors still left; the product of the prime
/// powers and the leftovers is always the input.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pub factors: BTreeMap<Natural, u32>,
    pub unfactored: Vec<Natural>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_empty()
    }

    pub fn product(&self) -> Natural {
        let mut acc = Natural::one();
        for (p, &e) in &self.factors {
            acc *= p.pow(e);
        }
        for c in &self.unfactored {
            acc *= c;
        }
        acc
    }

    fn add(&mut self, p: Natural, e: u32) {
        *self.factors.entry(p).or_insert(0) += e;
    }
}

pub fn factorize(n: &Natural, cfg: &FactorConfig) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::Domain("cannot factor 0".into()));
    }
    let mut out = Factorization::default();
    if let Some(small) = n.to_u64() {
        for (p, e) in factorize_u64(small) {
            out.add(Natural::from(p), e);
        }
        return Ok(out);
    }

    let mut rest = n.clone();
    let mut d = 2u32;
    while d <= cfg.trial_limit {
        if (&rest % d).is_zero() {
            let mut e = 0;
            while (&rest % d).is_zero() {
                rest /= d;
                e += 1;
            }
            out.add(Natural::from(d), e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok(out);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut budget = cfg.rho_budget;
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(small) = m.to_u64() {
            for (p, e) in factorize_u64(small) {
                out.add(Natural::from(p), e);
            }
            continue;
        }
        if is_prime_with(&m, cfg.rounds, cfg.seed).is_probably_prime() {
            out.add(m, 1);
            continue;
        }
        match rho_big(&m, &mut rng, &mut budget) {
            Some(f) => {
                let g = &m / &f;
                stack.push(f);
                stack.push(g);
            }
            None => out.unfactored.push(m),
        }
    }
    Ok(out)
}

fn rho_big(n: &BigUint, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    const BATCH: u64 = 128;
    while *budget > 0 {
        let c = rng.gen_biguint_below(n);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = rng.gen_biguint_below(n);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = one.clone();
        let mut q = one.clone();
        let mut r = 1u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let lim = BATCH.min(r - k);
                for _ in 0..lim {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += lim;
                *budget = budget.saturating_sub(lim);
                if *budget == 0 && g.is_one() {
                    return None;
                }
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

/// Complete factorization of a machine word, smallest prime first.
pub fn factorize_u64(n: u64) -> Vec<(u64, u32)> {
    let mut map: BTreeMap<u64, u32> = BTreeMap::new();
    let mut rest = n;
    for p in [2u64, 3, 5] {
        while rest.is_multiple_of(p) && rest > 0 {
            rest /= p;
            *map.entry(p).or_insert(0) += 1;
        }
    }
    let mut d = 7u64;
    let mut step = [4u64, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d <= 1000 && d * d <= rest {
        while rest.is_multiple_of(d) {
            rest /= d;
            *map.entry(d).or_insert(0) += 1;
        }
        d += step.next().unwrap();
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m <= 1 {
            continue;
        }
        if is_prime_u64(m) {
            *map.entry(m).or_insert(0) += 1;
            continue;
        }
        let f = rho_u64(m);
        stack.push(f);
        stack.push(m / f);
    }
    map.into_iter().collect()
}

fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    if let Some(r) = exact_sqrt_u64(n) {
        return r;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(n);
    loop {
        let c = rng.gen_range(1..n);
        let f = |x: u64| ((mul_mod_u64(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let mut y = rng.gen_range(0..n);
        let mut x;
        let mut ys = y;
        let mut g = 1;
        let mut q = 1;
        let mut r = 1u64;
        loop {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..64.min(r - k) {
                    y = f(y);
                    q = mul_mod_u64(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += 64;
            }
            r *= 2;
            if g != 1 {
                break;
            }
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g != 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn exact_sqrt_u64(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c.checked_mul(c) == Some(n))
}

/// P(n): the largest prime dividing `n`.
pub fn largest_prime_factor(n: &Natural) -> Result<Natural> {
    if *n < Natural::from(2u32) {
        return Err(Error::Domain("largest prime factor needs n >= 2".into()));
    }
    let f = factorize(n, &FactorConfig::default())?;
    if !f.is_complete() {
        return Err(Error::Domain(format!(
            "factorization of {n} exceeded the rho budget"
        )));
    }
    Ok(f.factors
        .keys()
        .next_back()
        .cloned()
        .expect("n >= 2 has a prime factor"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: u64) -> Vec<(u64, u32)> {
        factorize_u64(n)
    }

    #[test]
    fn small_examples() {
        assert_eq!(fac(6534), vec![(2, 1), (3, 3), (11, 2)]);
        assert_eq!(fac(1), vec![]);
        assert_eq!(fac(5040), vec![(2, 4), (3, 2), (5, 1), (7, 1)]);
    }

    #[test]
    fn largest_prime_factor_examples() {
        let p = |v: u64| largest_prime_factor(&Natural::from(v)).unwrap();
        assert_eq!(p(10), Natural::from(5u32));
        assert_eq!(p(28), Natural::from(7u32));
        assert_eq!(p(31), Natural::from(31u32));
        assert!(largest_prime_factor(&Natural::from(1u32)).is_err());
    }

    #[test]
    fn rho_near_u64_max() {
        // x² + c must not overflow when n is close to 2^64
        let n = 13_392_182_984_995_426_793u64;
        let prod: u128 = fac(n).iter().map(|&(p, e)| (p as u128).pow(e)).product();
        assert_eq!(prod, n as u128);
    }

    #[test]
    fn round_trip_u64_range() {
        for n in 1..20_000u64 {
            let f = fac(n);
            let prod: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(f.iter().all(|&(p, _)| is_prime_u64(p)));
        }
        let big = 1_000_000_007u64 * 998_244_353;
        assert_eq!(fac(big), vec![(998_244_353, 1), (1_000_000_007, 1)]);
    }

    #[test]
    fn big_semiprime_split_by_rho() {
        let p: Natural = "18446744073709551557".parse().unwrap();
        let q = Natural::from(1_000_000_007u64) * 10_000_000_019u64;
        let n = &p * &q * 12u32;
        let f = factorize(&n, &FactorConfig::default()).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.product(), n);
        assert_eq!(f.factors.get(&p), Some(&1));
        assert_eq!(f.factors.get(&Natural::from(2u32)), Some(&2));
    }

    #[test]
    fn exhausted_budget_reports_partial() {
        let p: Natural = "170141183460469231731687303715884105727".parse().unwrap();
        let q: Natural = "618970019642690137449562111".parse().unwrap();
        let n = &p * &q * 6u32;
        let cfg = FactorConfig {
            rho_budget: 1_000,
            ..FactorConfig::default()
        };
        let f = factorize(&n, &cfg).unwrap();
        assert!(!f.is_complete());
        assert_eq!(f.product(), n);
        assert_eq!(f.unfactored, vec![&p * &q]);
    }

    #[test]
    fn zero_rejected() {
        assert!(factorize(&Natural::zero(), &FactorConfig::default()).is_err());
    }
}
