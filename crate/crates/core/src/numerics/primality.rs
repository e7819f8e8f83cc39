//! Miller–Rabin primality.
//!
//! Below 2^64 the witness set {2, 3, 5, …, 37} is known to be exact, so the
//! answer there is a proof. Above it the bases are drawn from a ChaCha stream
//! seeded by the configuration seed and the candidate itself; the verdict for
//! a given `n` therefore does not depend on call order or thread schedule.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Natural;

pub const DEFAULT_ROUNDS: u32 = 40;
pub const DEFAULT_SEED: u64 = 0x5e9_1ab;

const DETERMINISTIC_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Small primes used for trial division ahead of the big-number test.
const TRIAL_PRIMES: [u32; 54] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimalityKind {
    Prime,
    Composite,
    ProbablePrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimalityVerdict {
    pub kind: PrimalityKind,
    /// Random rounds used; zero for deterministic decisions.
    pub witness_rounds: u32,
}

impl PrimalityVerdict {
    fn proven(prime: bool) -> Self {
        Self {
            kind: if prime {
                PrimalityKind::Prime
            } else {
                PrimalityKind::Composite
            },
            witness_rounds: 0,
        }
    }

    /// True for both proven and probable primes.
    pub fn is_probably_prime(&self) -> bool {
        self.kind != PrimalityKind::Composite
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityConfig {
    pub rounds: u32,
    pub seed: u64,
}

impl Default for PrimalityConfig {
    fn default() -> Self {
        Self {
            rounds: DEFAULT_ROUNDS,
            seed: DEFAULT_SEED,
        }
    }
}

impl PrimalityConfig {
    pub fn new(rounds: u32, seed: u64) -> Self {
        Self { rounds, seed }
    }

    pub fn check(&self, n: &Natural) -> PrimalityVerdict {
        is_prime_with(n, self.rounds, self.seed)
    }

    fn rng_for(&self, n: &Natural) -> ChaCha8Rng {
        let low = n.iter_u64_digits().next().unwrap_or(0);
        let mix = low.wrapping_mul(0x9e37_79b9_7f4a_7c15).rotate_left(17) ^ n.bits();
        ChaCha8Rng::seed_from_u64(self.seed ^ mix)
    }
}

/// Primality with the default seed.
pub fn is_prime(n: &Natural, rounds: u32) -> PrimalityVerdict {
    is_prime_with(n, rounds, DEFAULT_SEED)
}

pub fn is_prime_with(n: &Natural, rounds: u32, seed: u64) -> PrimalityVerdict {
    if let Some(small) = n.to_u64() {
        return PrimalityVerdict::proven(is_prime_u64(small));
    }
    for &p in &TRIAL_PRIMES {
        if (n % p).is_zero() {
            return PrimalityVerdict::proven(false);
        }
    }
    let rounds = rounds.max(1);
    let mut rng = PrimalityConfig { rounds, seed }.rng_for(n);
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let two = BigUint::from(2u32);
    let upper = n - &one; // bases drawn from [2, n-2]

    for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &upper);
        if !mr_round_big(n, &n_minus_1, &d, s, &a) {
            return PrimalityVerdict::proven(false);
        }
    }
    PrimalityVerdict {
        kind: PrimalityKind::ProbablePrime,
        witness_rounds: rounds,
    }
}

fn mr_round_big(n: &BigUint, n_minus_1: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n_minus_1 {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic for the whole `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &DETERMINISTIC_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &DETERMINISTIC_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
