//! Suborbit statistics for finite transitive permutation groups, a
//! verifier for the extremal subgroups of GL(4,2), and census bounds for
//! Cayley graphs.

pub mod catalog;
pub mod census;
pub mod cli;
pub mod error;
pub mod gf2;
pub mod group;
pub mod perm;
pub mod ratio;
pub mod sample;
pub mod suborbit;

pub use error::{Error, Result};
pub use ratio::ExactRatio;
