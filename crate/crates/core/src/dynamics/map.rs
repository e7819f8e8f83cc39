use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::DigitString;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    /// v ↦ |v − reverse(v)|
    ReverseSubtract,
    /// v ↦ |reverse(v) − c|, with 0 terminal
    SubtractConst,
    /// each digit x ↦ c·x mod 10
    DigitMultiply,
    /// (a, b) ↦ (digital_root(a + b), |a − b|) on two-digit numbers
    MixedCompose,
}

impl MapKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MapKind::ReverseSubtract => "reverse-subtract",
            MapKind::SubtractConst => "subtract-const",
            MapKind::DigitMultiply => "digit-multiply",
            MapKind::MixedCompose => "mixed-compose",
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "reverse-subtract" => MapKind::ReverseSubtract,
            "subtract-const" => MapKind::SubtractConst,
            "digit-multiply" => MapKind::DigitMultiply,
            "mixed-compose" => MapKind::MixedCompose,
            other => return Err(Error::Domain(format!("unknown map {other:?}"))),
        })
    }
}

/// A validated map together with the width that frames every value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMapSpec", into = "RawMapSpec")]
pub struct MapSpec {
    kind: MapKind,
    width: usize,
    c: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawMapSpec {
    kind: MapKind,
    width: usize,
    c: Option<u64>,
}

impl From<MapSpec> for RawMapSpec {
    fn from(m: MapSpec) -> Self {
        RawMapSpec {
            kind: m.kind,
            width: m.width,
            c: m.c,
        }
    }
}

impl TryFrom<RawMapSpec> for MapSpec {
    type Error = Error;

    fn try_from(r: RawMapSpec) -> Result<Self> {
        MapSpec::new(r.kind, r.width, r.c)
    }
}

const MAX_WIDTH: usize = 18;

impl MapSpec {
    pub fn new(kind: MapKind, width: usize, c: Option<u64>) -> Result<Self> {
        match kind {
            MapKind::MixedCompose => {
                if width != 2 {
                    return Err(Error::Domain("mixed-compose is fixed at width 2".into()));
                }
                if c.is_some() {
                    return Err(Error::Domain("mixed-compose takes no constant".into()));
                }
            }
            _ => {
                if width == 0 || width > MAX_WIDTH {
                    return Err(Error::Domain(format!("width must be in 1..={MAX_WIDTH}")));
                }
            }
        }
        match (kind, c) {
            (MapKind::ReverseSubtract, Some(_)) => {
                return Err(Error::Domain("reverse-subtract takes no constant".into()))
            }
            (MapKind::SubtractConst, None) | (MapKind::DigitMultiply, None) => {
                return Err(Error::Domain(format!("{kind} needs a constant c")))
            }
            (MapKind::SubtractConst, Some(c)) if c == 0 || c >= 10u64.pow(width as u32) => {
                return Err(Error::Domain(format!(
                    "subtract-const needs 1 <= c < 10^{width}"
                )))
            }
            (MapKind::DigitMultiply, Some(c)) if !(2..=9).contains(&c) => {
                return Err(Error::Domain("digit-multiply needs 2 <= c <= 9".into()))
            }
            _ => {}
        }
        Ok(Self { kind, width, c })
    }

    pub fn reverse_subtract(width: usize) -> Result<Self> {
        Self::new(MapKind::ReverseSubtract, width, None)
    }

    pub fn subtract_const(width: usize, c: u64) -> Result<Self> {
        Self::new(MapKind::SubtractConst, width, Some(c))
    }

    pub fn digit_multiply(width: usize, c: u64) -> Result<Self> {
        Self::new(MapKind::DigitMultiply, width, Some(c))
    }

    pub fn mixed_compose() -> Self {
        Self {
            kind: MapKind::MixedCompose,
            width: 2,
            c: None,
        }
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn c(&self) -> Option<u64> {
        self.c
    }

    /// Smallest and largest admissible start value.
    pub fn value_bounds(&self) -> (u64, u64) {
        match self.kind {
            MapKind::MixedCompose => (10, 99),
            _ => (0, 10u64.pow(self.width as u32) - 1),
        }
    }

    pub fn check_value(&self, v: u64) -> Result<()> {
        let (lo, hi) = self.value_bounds();
        if v < lo || v > hi {
            return Err(Error::Domain(format!(
                "{v} outside the {} domain {lo}..={hi}",
                self.kind
            )));
        }
        Ok(())
    }

    /// Halting state: subtract-const stops at 0.
    pub(crate) fn is_terminal(&self, v: u64) -> bool {
        self.kind == MapKind::SubtractConst && v == 0
    }

    /// One application on a raw value already known to be in the domain.
    pub(crate) fn apply(&self, v: u64) -> u64 {
        match self.kind {
            MapKind::ReverseSubtract => v.abs_diff(reverse_value(v, self.width)),
            MapKind::SubtractConst => {
                if v == 0 {
                    0
                } else {
                    reverse_value(v, self.width).abs_diff(self.c.unwrap_or(0))
                }
            }
            MapKind::DigitMultiply => {
                let c = self.c.unwrap_or(1);
                let mut out = 0u64;
                let mut place = 1u64;
                let mut rest = v;
                for _ in 0..self.width {
                    out += (rest % 10 * c % 10) * place;
                    rest /= 10;
                    place *= 10;
                }
                out
            }
            MapKind::MixedCompose => {
                let (a, b) = (v / 10, v % 10);
                let mut s = a + b;
                while s >= 10 {
                    s = s / 10 + s % 10;
                }
                10 * s + a.abs_diff(b)
            }
        }
    }
}

impl fmt::Display for MapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} w={}", self.kind, self.width)?;
        if let Some(c) = self.c {
            write!(f, " c={c}")?;
        }
        Ok(())
    }
}

/// Reversal inside a frame of `width` digits: 24 in width 5 is 00024 → 42000.
pub(crate) fn reverse_value(mut v: u64, width: usize) -> u64 {
    let mut r = 0;
    for _ in 0..width {
        r = r * 10 + v % 10;
        v /= 10;
    }
    r
}

/// One application of the map to a digit string of the map's width.
pub fn step(m: &MapSpec, v: &DigitString) -> Result<DigitString> {
    if v.width() != m.width() {
        return Err(Error::Domain(format!(
            "value has width {}, map expects {}",
            v.width(),
            m.width()
        )));
    }
    let raw = v.value();
    m.check_value(raw)?;
    DigitString::from_value(m.apply(raw), m.width())
}
