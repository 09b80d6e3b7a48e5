//! Enumerative toolkit for the noncrossing partition lattice and its relatives.
//!
//! The core objects are set partitions of `{1, .., n}` under refinement,
//! restricted (or not) to noncrossing partitions.  On top of that sit the
//! reflection-length order on the symmetric group, labelled maximal chains and
//! their parking-function statistics, two cell complexes built from chains,
//! the associahedron with an integral realization, and the moment/cumulant
//! transforms driven by either partition lattice.

pub mod assoc;
pub mod bounds;
pub mod chains;
pub mod cli;
pub mod complex;
pub mod error;
pub mod export;
pub mod freeprob;
pub mod parking;
pub mod partition;
pub mod perm;
pub mod series;
pub mod verify;

mod brute;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use partition::{LatticeKind, Partition};
pub use perm::{Permutation, Transposition};
