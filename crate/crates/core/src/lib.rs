//! Integer partitions and the generalized Bressoud bijection.
//!
//! A partition is *d-distinct* when any two of its parts differ by at least
//! `d`. For every permutation `π` of the residues `0..d`, the map in
//! [`bijection`] sends d-distinct partitions of `n` onto the distinct
//! partitions of `n` in which every part `≡ π(s) (mod d)` exceeds `d` times
//! the number of parts lying in the residue classes `π(0), …, π(s-1)`.
//!
//! * [`partition`]: the [`Partition`] type, gap and permutation parameters,
//!   conjugation and Young-diagram rendering.
//! * [`enumeration`]: partitions of `n` in descending lexicographic order and
//!   restricted counting.
//! * [`bijection`]: the four-step forward map, its inverse and step traces.
//! * [`verification`]: exhaustive checks of the identities the map proves.
//! * [`cli`]: the command-line front end.

pub mod bijection;
pub mod cli;
pub mod enumeration;
pub mod partition;
pub mod verification;

pub use bijection::{
    forward, inverse, BijectionError, Direction, GroupedRows, PaddedParts, StepTrace,
};
pub use enumeration::{count, partitions_of, Filter, Partitions};
pub use partition::{DistinctnessGap, Partition, PartitionError, ResiduePermutation};
pub use verification::{verify_identity, verify_lemma_conjugate, verify_range, VerificationReport};
