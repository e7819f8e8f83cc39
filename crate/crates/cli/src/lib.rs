//! Pieces of the `seqlab` command line that are worth testing on their own.

pub mod bfile;
