//! Generation and restricted counting of the partitions of `n`.
//!
//! Partitions are produced in descending lexicographic order of their part
//! sequences: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)` for `n = 4`.

use std::iter::FusedIterator;

use crate::partition::{DistinctnessGap, Partition, ResiduePermutation};

/// Restartable stream of all partitions of `n`. Cloning yields an
/// independent stream at the same position.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Partitions {
    pub fn new(n: u64) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self {
            current: Some(first),
        }
    }

    fn advance(parts: &mut Vec<u64>) -> bool {
        // Trailing ones are absorbed into the rightmost part larger than 1.
        let Some(i) = parts.iter().rposition(|&p| p > 1) else {
            return false;
        };
        let mut rest = (parts.len() - i) as u64;
        let v = parts[i] - 1;
        parts[i] = v;
        parts.truncate(i + 1);
        while rest >= v {
            parts.push(v);
            rest -= v;
        }
        if rest > 0 {
            parts.push(rest);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.as_mut()?;
        let out = Partition::from_parts_unchecked(parts.clone());
        if !Self::advance(parts) {
            self.current = None;
        }
        Some(out)
    }
}

impl FusedIterator for Partitions {}

/// Every partition of `n` exactly once; `n = 0` yields the empty partition.
pub fn partitions_of(n: u64) -> Partitions {
    Partitions::new(n)
}

/// Number of partitions of `n` for which `predicate` holds.
pub fn count<F>(n: u64, predicate: F) -> u64
where
    F: Fn(&Partition) -> bool,
{
    partitions_of(n).filter(|p| predicate(p)).count() as u64
}

pub fn d_distinct_partitions(n: u64, gap: DistinctnessGap) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(move |p| p.is_d_distinct(gap))
}

/// Distinct partitions of `n` satisfying the residue-threshold conditions of
/// `pi`: the codomain of the forward map.
pub fn target_partitions(n: u64, pi: ResiduePermutation) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(move |p| p.satisfies_conditions(&pi))
}

/// The closed set of predicates exposed for enumeration and counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    All,
    DDistinct(DistinctnessGap),
    Target(ResiduePermutation),
    /// At most `m` parts.
    AtMostParts(usize),
    /// Every part at most `m`.
    PartsAtMost(u64),
    AllOdd,
    EvenPartCount,
    Distinct,
}

impl Filter {
    pub fn matches(&self, p: &Partition) -> bool {
        match self {
            Filter::All => true,
            Filter::DDistinct(gap) => p.is_d_distinct(*gap),
            Filter::Target(pi) => p.satisfies_conditions(pi),
            Filter::AtMostParts(m) => p.len() <= *m,
            Filter::PartsAtMost(m) => p.largest() <= *m,
            Filter::AllOdd => p.parts().iter().all(|&x| x % 2 == 1),
            Filter::EvenPartCount => p.len().is_multiple_of(2),
            Filter::Distinct => p.is_distinct(),
        }
    }

    pub fn stream(&self, n: u64) -> impl Iterator<Item = Partition> + '_ {
        partitions_of(n).filter(move |p| self.matches(p))
    }

    pub fn count(&self, n: u64) -> u64 {
        count(n, |p| self.matches(p))
    }
}
