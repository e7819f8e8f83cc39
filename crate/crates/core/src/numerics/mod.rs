//! Arbitrary-precision kernel shared by every sequence family.

mod digits;
mod factor;
mod kempner;
mod power;
mod primality;

pub use digits::{concat_decimal, digit_count, digital_root, reverse_fixed, DigitString};
pub use factor::{factorize, factorize_u64, largest_prime_factor, FactorConfig, Factorization};
pub(crate) use kempner::s_prime_power_u64;
pub use kempner::{legendre, smarandache_s, smarandache_s_prime_power, smarandache_s_u64};
pub use power::{is_perfect_power, nth_root_exact};
pub use primality::{
    is_prime, is_prime_u64, is_prime_with, primes_up_to, PrimalityConfig, PrimalityKind,
    PrimalityVerdict, DEFAULT_ROUNDS, DEFAULT_SEED,
};

/// Unbounded non-negative integer.
pub type Natural = num_bigint::BigUint;

/// Exact fraction, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
