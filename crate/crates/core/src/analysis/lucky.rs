use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LuckyFraction {
    pub a: u64,
    pub b: u64,
    pub reduced: Rational,
}

/// Two-digit fractions a/b (a < b) where striking one shared nonzero digit
/// from each side happens to leave an equal fraction.
pub fn lucky_cancellations(num_digits: usize) -> Result<Vec<LuckyFraction>> {
    if num_digits != 2 {
        return Err(Error::Domain(format!(
            "only two-digit fractions are supported, got {num_digits}"
        )));
    }
    let mut out = Vec::new();
    for a in 10..=99u64 {
        for b in a + 1..=99 {
            let da = [a / 10, a % 10];
            let db = [b / 10, b % 10];
            let hit = (0..2).any(|i| {
                (0..2).any(|j| {
                    let (num, den) = (da[1 - i], db[1 - j]);
                    da[i] == db[j] && da[i] != 0 && den != 0 && a * den == b * num
                })
            });
            if hit {
                out.push(LuckyFraction {
                    a,
                    b,
                    reduced: Rational::new(BigInt::from(a), BigInt::from(b)),
                });
            }
        }
    }
    Ok(out)
}
