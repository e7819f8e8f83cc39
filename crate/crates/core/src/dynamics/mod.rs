//! Iterated maps on finite sets of fixed-width digit strings.
//!
//! Every orbit on a finite set is eventually periodic, so an orbit is fully
//! described by its transient (tail) and its cycle. A census runs the orbit
//! of every start in a range and groups starts by the cycle they fall into.

mod census;
mod map;
mod orbit;

pub use census::{census, census_with_jobs, CensusReport, CycleClass};
pub use map::{step, MapKind, MapSpec};
pub use orbit::{canonical_cycle, orbit, OrbitReport};
