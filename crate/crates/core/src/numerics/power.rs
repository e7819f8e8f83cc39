use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::primality::primes_up_to;
use super::Natural;

const SMALL_PRIME_BOUND: u64 = 1000;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(SMALL_PRIME_BOUND))
}

/// `Some(r)` when `r^k == n` exactly.
pub fn nth_root_exact(n: &Natural, k: u32) -> Option<Natural> {
    if k == 0 {
        return None;
    }
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

/// Finds `(b, e)` with `b^e == n`, `e >= 2` and `e` maximal. `1` is reported
/// as `(1, 2)`; `0` and non-powers give `None`.
///
/// Small prime factors pin the exponent: it must divide the gcd of their
/// multiplicities. Remaining candidates are prime exponents, peeled off one
/// at a time so that the product of the peeled primes is the maximal `e`.
pub fn is_perfect_power(n: &Natural) -> Option<(Natural, u32)> {
    if n.is_zero() {
        return None;
    }
    if n.is_one() {
        return Some((Natural::one(), 2));
    }

    let mut rest = n.clone();
    let mut g: u64 = 0;
    let mut small_part: Vec<(u64, u64)> = Vec::new();
    for &p in small_primes() {
        if (&rest % p).is_zero() {
            let mut v = 0u64;
            while (&rest % p).is_zero() {
                rest /= p;
                v += 1;
            }
            g = g.gcd(&v);
            small_part.push((p, v));
            if g == 1 {
                return None;
            }
        }
    }
    if rest.is_one() {
        // n is smooth over the small primes; the gcd is the whole story
        let base = small_part.iter().fold(Natural::one(), |acc, &(p, v)| {
            acc * Natural::from(p).pow((v / g) as u32)
        });
        return Some((base, g as u32));
    }

    let exponent_primes = primes_up_to(max_exponent(n) as u64);
    let mut cur = n.clone();
    let mut e_total: u32 = 1;
    let mut idx = 0;
    while idx < exponent_primes.len() {
        let p = exponent_primes[idx];
        if p > max_exponent(&cur) as u64 {
            break;
        }
        if g != 0 && !g.is_multiple_of(p) {
            idx += 1;
            continue;
        }
        match nth_root_exact(&cur, p as u32) {
            Some(r) => {
                cur = r;
                e_total *= p as u32;
                if g != 0 {
                    g /= p;
                }
            }
            None => idx += 1,
        }
    }
    (e_total >= 2).then_some((cur, e_total))
}

/// Largest exponent possible for a base with a prime factor above the
/// small-prime bound: floor(log_1001(n)).
fn max_exponent(n: &Natural) -> u32 {
    let bits = n.bits() as f64;
    let per = ((SMALL_PRIME_BOUND + 1) as f64).log2();
    let est = (bits / per).floor() as u32;
    // guard the float estimate against being one too small
    est.max(1) + 1
}
