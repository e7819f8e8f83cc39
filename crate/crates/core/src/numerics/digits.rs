use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Natural;
use crate::error::{Error, Result};

/// Number of decimal digits in `n`; zero counts as one digit.
pub fn digit_count(n: &Natural) -> usize {
    if n.is_zero() {
        1
    } else {
        n.to_str_radix(10).len()
    }
}

/// `a` followed by the decimal digits of `b`, i.e. `a * 10^digit_count(b) + b`.
pub fn concat_decimal(a: &Natural, b: &Natural) -> Natural {
    let shift = BigUint::from(10u32).pow(digit_count(b) as u32);
    a * shift + b
}

/// Repeated digit sum down to a single digit. Zero is outside the domain.
pub fn digital_root(n: &Natural) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::Domain("digital root of 0 is undefined".into()));
    }
    // n ≡ dr(n) (mod 9) with dr in 1..=9
    let r = (n % 9u32).to_u32().unwrap_or(0);
    Ok(if r == 0 { 9 } else { r })
}

/// Fixed-width decimal digit vector; leading zeros are significant.
///
/// Serialized as the padded decimal string, e.g. `"02"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DigitString {
    digits: Vec<u8>,
}

impl DigitString {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::Domain("digit string needs at least one slot".into()));
        }
        if let Some(d) = digits.iter().find(|&&d| d > 9) {
            return Err(Error::Domain(format!("digit {d} out of range")));
        }
        Ok(Self { digits })
    }

    /// Pads `value` with leading zeros to `width` slots.
    pub fn from_value(value: u64, width: usize) -> Result<Self> {
        if width == 0 || width > 19 {
            return Err(Error::Domain(format!("unsupported width {width}")));
        }
        let s = value.to_string();
        if s.len() > width {
            return Err(Error::Width { value: s, width });
        }
        let mut digits = vec![0u8; width - s.len()];
        digits.extend(s.bytes().map(|b| b - b'0'));
        Ok(Self { digits })
    }

    pub fn parse(s: &str) -> Result<Self> {
        if !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Domain(format!("not a digit string: {s:?}")));
        }
        Self::new(s.bytes().map(|b| b - b'0').collect())
    }

    pub fn width(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().fold(0u64, |acc, &d| acc * 10 + d as u64)
    }

    pub fn to_natural(&self) -> Natural {
        self.digits
            .iter()
            .fold(Natural::zero(), |acc, &d| acc * 10u32 + d as u32)
    }
}

impl TryFrom<String> for DigitString {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        Self::parse(&s)
    }
}

impl From<DigitString> for String {
    fn from(d: DigitString) -> String {
        d.to_string()
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Reverses the digit slots; the width is unchanged.
pub fn reverse_fixed(d: &DigitString) -> DigitString {
    let mut digits = d.digits.clone();
    digits.reverse();
    DigitString { digits }
}
