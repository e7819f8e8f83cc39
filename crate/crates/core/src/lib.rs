//! Computational laboratory for a family of recreational integer sequences,
//! digit-dynamical maps and Smarandache-type arithmetic functions.
//!
//! Every generator comes with an enumeration or brute-force counterpart so
//! that published values can be checked rather than trusted.

pub mod analysis;
pub mod concat;
pub mod dynamics;
mod error;
pub mod numerics;
pub mod progressions;
pub mod spds;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::{Natural, Rational};
