//! Partitions, the distinctness gap `d` and residue permutations.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Glyph used for one box of a Young diagram.
pub const BOX: char = '#';

/// Text notation for the empty partition.
pub const EMPTY_NOTATION: &str = "-";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("not a partition: part {value} at position {index} is not positive")]
    NotPositive { index: usize, value: i64 },
    #[error("not a partition: parts {left},{right} at position {index} are out of order")]
    OutOfOrder { index: usize, left: u64, right: u64 },
    #[error("partition weight overflows 64 bits")]
    Overflow,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("distinctness gap must be at least 1")]
    ZeroGap,
    #[error("not a permutation of 0..{d}: {image:?}")]
    NotAPermutation { d: usize, image: Vec<usize> },
}

/// A finite non-increasing sequence of positive integers, stored largest
/// first (top row of the Young diagram first).
///
/// Parts and the weight are `u64`; the empty partition is the unique
/// partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
    weight: u64,
}

impl Partition {
    /// Builds a partition from raw integers, rejecting non-positive entries
    /// and increasing adjacent pairs.
    pub fn new<I>(raw: I) -> Result<Self, PartitionError>
    where
        I: IntoIterator<Item = i64>,
    {
        let parts = raw
            .into_iter()
            .enumerate()
            .map(|(index, value)| {
                u64::try_from(value)
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or(PartitionError::NotPositive { index, value })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_parts(parts)
    }

    pub fn from_parts(parts: Vec<u64>) -> Result<Self, PartitionError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::NotPositive { index, value: 0 });
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::OutOfOrder {
                index,
                left: parts[index],
                right: parts[index + 1],
            });
        }
        let weight = parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or(PartitionError::Overflow)?;
        Ok(Self { parts, weight })
    }

    /// Caller guarantees positive, non-increasing parts with a sum in range.
    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// The integer this partition sums to.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Position `i` of the first adjacent pair with `parts[i] - parts[i+1] < d`.
    pub fn first_gap_violation(&self, gap: DistinctnessGap) -> Option<usize> {
        self.parts.windows(2).position(|w| w[0] - w[1] < gap.get())
    }

    /// Whether any two parts differ by at least `d`. Partitions with fewer
    /// than two parts are d-distinct for every `d`.
    pub fn is_d_distinct(&self, gap: DistinctnessGap) -> bool {
        self.first_gap_violation(gap).is_none()
    }

    /// All parts pairwise different.
    pub fn is_distinct(&self) -> bool {
        self.is_d_distinct(DistinctnessGap::ONE)
    }

    /// Reflection of the Young diagram across its main diagonal: part `j` of
    /// the result counts the parts of `self` that are larger than `j`.
    pub fn conjugate(&self) -> Partition {
        let mut columns = Vec::with_capacity(self.largest() as usize);
        let mut rows = self.parts.len();
        for column in 1..=self.largest() {
            while rows > 0 && self.parts[rows - 1] < column {
                rows -= 1;
            }
            columns.push(rows as u64);
        }
        Partition::from_parts_unchecked(columns)
    }

    /// Whether the partition is distinct and every part `≡ π(s) (mod d)` is
    /// strictly greater than `d` times the number of parts congruent to one
    /// of `π(0), …, π(s-1)`.
    pub fn satisfies_conditions(&self, pi: &ResiduePermutation) -> bool {
        if !self.is_distinct() {
            return false;
        }
        let d = pi.d();
        let mut per_rank = vec![0u64; d];
        for &p in &self.parts {
            per_rank[pi.rank_of_part(p)] += 1;
        }
        let mut below = Vec::with_capacity(d);
        let mut acc = 0u64;
        for &k in &per_rank {
            below.push(acc);
            acc += k;
        }
        self.parts
            .iter()
            .all(|&p| p > pi.gap().get() * below[pi.rank_of_part(p)])
    }

    /// Young diagram, one line per part, each line terminated by `\n`.
    pub fn render_young(&self) -> String {
        let mut out = String::with_capacity(self.weight as usize + self.len());
        for &p in &self.parts {
            out.extend(std::iter::repeat_n(BOX, p as usize));
            out.push('\n');
        }
        out
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = PartitionError;

    fn try_from(raw: Vec<i64>) -> Result<Self, Self::Error> {
        Partition::new(raw)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// `5,4,1`, or `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            f.write_str(EMPTY_NOTATION)
        } else {
            write!(f, "{}", self.parts.iter().format(","))
        }
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == EMPTY_NOTATION {
            return Ok(Partition::empty());
        }
        Partition::new(parse_list::<i64>(s)?)
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, PartitionError>
where
    T::Err: fmt::Display,
{
    if s.trim().is_empty() {
        return Err(PartitionError::Parse {
            input: s.to_string(),
            reason: "empty list".to_string(),
        });
    }
    s.split(',')
        .map(|item| {
            item.trim().parse::<T>().map_err(|e| PartitionError::Parse {
                input: s.to_string(),
                reason: format!("{:?}: {e}", item.trim()),
            })
        })
        .collect()
}

/// Minimum difference `d ≥ 1` required between any two parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct DistinctnessGap(u64);

impl DistinctnessGap {
    pub const ONE: DistinctnessGap = DistinctnessGap(1);

    pub fn new(d: u64) -> Result<Self, PartitionError> {
        if d == 0 {
            Err(PartitionError::ZeroGap)
        } else {
            Ok(Self(d))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for DistinctnessGap {
    type Error = PartitionError;

    fn try_from(d: u64) -> Result<Self, Self::Error> {
        Self::new(d)
    }
}

impl From<DistinctnessGap> for u64 {
    fn from(g: DistinctnessGap) -> Self {
        g.0
    }
}

impl fmt::Display for DistinctnessGap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A permutation `π` of the residues `0..d`, given by its image list
/// `π(0), π(1), …, π(d-1)`.
///
/// The position `j` of a residue in the image list is its *rank*: residue
/// class `π(0)` is unconstrained, and class `π(s)` is bounded below by the
/// sizes of the classes of rank `< s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ResiduePermutation {
    image: Vec<usize>,
    rank: Vec<usize>,
}

impl ResiduePermutation {
    pub fn new(image: Vec<usize>) -> Result<Self, PartitionError> {
        let d = image.len();
        let mut rank = vec![usize::MAX; d];
        for (j, &r) in image.iter().enumerate() {
            if r >= d || rank[r] != usize::MAX {
                return Err(PartitionError::NotAPermutation { d, image });
            }
            rank[r] = j;
        }
        if d == 0 {
            return Err(PartitionError::ZeroGap);
        }
        Ok(Self { image, rank })
    }

    pub fn identity(d: usize) -> Result<Self, PartitionError> {
        Self::new((0..d).collect())
    }

    /// `d = 2, π = (1, 0)`: every even part exceeds twice the number of odd
    /// parts.
    pub fn bressoud_original() -> Self {
        Self::new(vec![1, 0]).expect("valid permutation")
    }

    /// `d = 2, π = (0, 1)`: every odd part exceeds twice the number of even
    /// parts.
    pub fn bressoud_dual() -> Self {
        Self::new(vec![0, 1]).expect("valid permutation")
    }

    /// All `d!` permutations of `0..d` in lexicographic order of their image
    /// lists.
    pub fn all(d: usize) -> impl Iterator<Item = ResiduePermutation> {
        (0..d)
            .permutations(d)
            .map(|image| ResiduePermutation::new(image).expect("itertools yields permutations"))
    }

    pub fn d(&self) -> usize {
        self.image.len()
    }

    pub fn gap(&self) -> DistinctnessGap {
        DistinctnessGap(self.image.len() as u64)
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `π(j)`.
    pub fn get(&self, j: usize) -> usize {
        self.image[j]
    }

    /// The rank `j` with `π(j) = residue`.
    pub fn rank_of_residue(&self, residue: usize) -> usize {
        self.rank[residue]
    }

    /// Rank of the residue class of a part of the target partition.
    pub fn rank_of_part(&self, part: u64) -> usize {
        self.rank[self.residue(part)]
    }

    /// Nonnegative remainder of `value` mod `d`.
    pub fn residue(&self, value: u64) -> usize {
        (value % self.image.len() as u64) as usize
    }

    /// `π(j) - 1 (mod d)`: the residue of the intermediate values that are
    /// shifted into class `π(j)`.
    pub fn shifted_residue(&self, j: usize) -> usize {
        let d = self.d();
        (self.image[j] + d - 1) % d
    }
}

impl TryFrom<Vec<usize>> for ResiduePermutation {
    type Error = PartitionError;

    fn try_from(image: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(image)
    }
}

impl From<ResiduePermutation> for Vec<usize> {
    fn from(p: ResiduePermutation) -> Self {
        p.image
    }
}

/// Comma-separated image list, e.g. `2,0,1`.
impl fmt::Display for ResiduePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.image.iter().format(","))
    }
}

impl FromStr for ResiduePermutation {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ResiduePermutation::new(parse_list::<usize>(s)?)
    }
}
