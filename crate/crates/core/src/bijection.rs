//! The generalized Bressoud bijection.
//!
//! For a permutation `π` of the residues mod `d`, the forward map sends a
//! d-distinct partition `a_1 > … > a_m` to a distinct partition of the same
//! weight in four steps:
//!
//! 1. subtract the staircase `(m-1)d+1, …, d+1, 1` from the parts, leaving
//!    `m` non-increasing nonnegative values `b_1 ≥ … ≥ b_m`;
//! 2. regroup the `b` values into `d` residue groups, stacking the group of
//!    residue `π(d-1)-1` on top down to the group of residue `π(0)-1` at the
//!    bottom, each group non-increasing;
//! 3. add the staircase back by stack position: row `r` counted from the
//!    bottom receives `r·d + 1`, which moves a value of residue `π(j)-1`
//!    into residue `π(j)`;
//! 4. sort.
//!
//! The image is exactly the set of distinct partitions in which every part
//! `≡ π(s)` exceeds `d` times the number of parts in classes `π(0..s)`; see
//! [`Partition::satisfies_conditions`]. The inverse undoes the steps in
//! reverse order and fails precisely outside that set.
//!
//! With `d = 2`, `π = (1, 0)` gives Bressoud's original map and `π = (0, 1)`
//! its dual.

use std::fmt::{self, Write as _};

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{DistinctnessGap, Partition, ResiduePermutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    /// `index` is the position of `upper` in the partition; `lower` follows it.
    #[error("not {d}-distinct at parts {upper},{lower}")]
    NotDistinct {
        d: u64,
        index: usize,
        upper: u64,
        lower: u64,
    },
    #[error(
        "condition c_{s} violated: part {part} ≡ {residue} (mod {d}) is not greater than {threshold}"
    )]
    ConditionViolated {
        s: usize,
        d: u64,
        residue: usize,
        part: u64,
        threshold: u64,
    },
}

fn check_gap(lambda: &Partition, gap: DistinctnessGap) -> Result<(), BijectionError> {
    match lambda.first_gap_violation(gap) {
        None => Ok(()),
        Some(index) => Err(BijectionError::NotDistinct {
            d: gap.get(),
            index,
            upper: lambda.parts()[index],
            lower: lambda.parts()[index + 1],
        }),
    }
}

/// Staircase offsets for `m` rows listed top first: `(m-1)d+1, …, d+1, 1`.
pub fn staircase(m: usize, gap: DistinctnessGap) -> Vec<u64> {
    (0..m as u64).rev().map(|r| r * gap.get() + 1).collect()
}

/// The `m` values left after removing the staircase, trailing zeros kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PaddedParts {
    values: Vec<u64>,
}

impl PaddedParts {
    pub fn new(values: Vec<u64>) -> Result<Self, Vec<u64>> {
        if values.windows(2).all(|w| w[0] >= w[1]) {
            Ok(Self { values })
        } else {
            Err(values)
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Part count of the partition these values came from.
    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl TryFrom<Vec<u64>> for PaddedParts {
    type Error = String;

    fn try_from(values: Vec<u64>) -> Result<Self, Self::Error> {
        PaddedParts::new(values).map_err(|v| format!("values must be non-increasing: {v:?}"))
    }
}

impl From<PaddedParts> for Vec<u64> {
    fn from(p: PaddedParts) -> Self {
        p.values
    }
}

/// One residue group of the step-2 stack.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueGroup {
    /// Position `j` of the group in the permutation; the group is the `j`-th
    /// from the bottom of the stack.
    pub rank: usize,
    /// `π(j) - 1 (mod d)`, shared by every value in the group.
    pub residue: usize,
    /// `π(j)`, the residue of these rows after the staircase is added back.
    pub target_residue: usize,
    /// Non-increasing.
    pub values: Vec<u64>,
}

/// The step-2 arrangement: `d` residue groups stacked top to bottom in the
/// order `π(d-1)-1, …, π(0)-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupedRows {
    pub d: usize,
    /// Top group first.
    pub groups: Vec<ResidueGroup>,
}

impl GroupedRows {
    fn from_ranked(pi: &ResiduePermutation, mut by_rank: Vec<Vec<u64>>) -> Self {
        let d = pi.d();
        let groups = (0..d)
            .rev()
            .map(|j| ResidueGroup {
                rank: j,
                residue: pi.shifted_residue(j),
                target_residue: pi.get(j),
                values: std::mem::take(&mut by_rank[j]),
            })
            .collect();
        Self { d, groups }
    }

    /// `k_j`, the size of the group of rank `j`, indexed by `j`.
    pub fn group_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.d];
        for g in &self.groups {
            sizes[g.rank] = g.values.len();
        }
        sizes
    }

    /// All values in stack order, top row first.
    pub fn stack(&self) -> impl Iterator<Item = u64> + '_ {
        self.groups.iter().flat_map(|g| g.values.iter().copied())
    }

    /// Total number of rows.
    pub fn len(&self) -> usize {
        self.groups.iter().map(|g| g.values.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn gap(&self) -> DistinctnessGap {
        DistinctnessGap::new(self.d as u64).expect("d >= 1")
    }
}

/// Step 1: `b_i = a_i - ((m-i)d + 1)`.
pub fn staircase_subtract(
    lambda: &Partition,
    gap: DistinctnessGap,
) -> Result<PaddedParts, BijectionError> {
    check_gap(lambda, gap)?;
    let values: Vec<u64> = lambda
        .parts()
        .iter()
        .zip(staircase(lambda.len(), gap))
        .map(|(&a, s)| a - s)
        .collect();
    debug_assert!(values
        .windows(2)
        .zip(lambda.parts().windows(2))
        .all(|(b, a)| b[0] - b[1] == a[0] - a[1] - gap.get()));
    Ok(PaddedParts { values })
}

/// Step 2. Zero values have residue 0 and land in the group of rank `j` with
/// `π(j) = 1`.
pub fn regroup_by_residue(b: &PaddedParts, pi: &ResiduePermutation) -> GroupedRows {
    let d = pi.d();
    let mut by_rank = vec![Vec::new(); d];
    for &v in &b.values {
        by_rank[pi.rank_of_residue((pi.residue(v) + 1) % d)].push(v);
    }
    GroupedRows::from_ranked(pi, by_rank)
}

/// Step 3: row `r` from the bottom of the stack receives `r·d + 1`. Returns
/// the shifted rows in stack order, top first.
pub fn staircase_add(g: &GroupedRows) -> Vec<u64> {
    g.stack()
        .zip(staircase(g.len(), g.gap()))
        .map(|(v, s)| v + s)
        .collect()
}

/// Step 4.
pub fn sort_parts(mut rows: Vec<u64>) -> Result<Partition, crate::PartitionError> {
    rows.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_parts(rows)
}

/// The forward map on d-distinct partitions, `d = pi.d()`.
pub fn forward(lambda: &Partition, pi: &ResiduePermutation) -> Result<Partition, BijectionError> {
    let b = staircase_subtract(lambda, pi.gap())?;
    let rows = staircase_add(&regroup_by_residue(&b, pi));
    Ok(sort_parts(rows).expect("shifted rows are positive"))
}

/// Undoes steps 4 and 3: regroups `mu` by the residue rank of its parts and
/// subtracts the staircase bottom-up, checking each group's threshold.
fn unshift(mu: &Partition, pi: &ResiduePermutation) -> Result<GroupedRows, BijectionError> {
    check_gap(mu, DistinctnessGap::ONE)?;
    let d = pi.d();
    let step = pi.gap().get();
    let mut by_rank = vec![Vec::new(); d];
    for &p in mu.parts() {
        by_rank[pi.rank_of_part(p)].push(p);
    }
    let mut below = 0u64;
    for (j, group) in by_rank.iter_mut().enumerate() {
        if let Some(&smallest) = group.last() {
            let threshold = step * below;
            if smallest <= threshold {
                return Err(BijectionError::ConditionViolated {
                    s: j,
                    d: step,
                    residue: pi.get(j),
                    part: smallest,
                    threshold,
                });
            }
        }
        let k = group.len() as u64;
        for (from_bottom, v) in group.iter_mut().rev().enumerate() {
            *v -= (below + from_bottom as u64) * step + 1;
        }
        below += k;
    }
    Ok(GroupedRows::from_ranked(pi, by_rank))
}

/// Undoes steps 2 and 1.
fn unsubtract(g: &GroupedRows) -> (PaddedParts, Partition) {
    let mut values: Vec<u64> = g.stack().collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let parts = values
        .iter()
        .zip(staircase(values.len(), g.gap()))
        .map(|(&b, s)| b + s)
        .collect();
    (
        PaddedParts { values },
        Partition::from_parts_unchecked(parts),
    )
}

/// The inverse map. Succeeds exactly when `mu` is distinct and satisfies the
/// conditions of `pi`; otherwise reports the first failing condition `c_s`.
pub fn inverse(mu: &Partition, pi: &ResiduePermutation) -> Result<Partition, BijectionError> {
    let grouped = unshift(mu, pi)?;
    Ok(unsubtract(&grouped).1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Inverse => "inverse",
        })
    }
}

/// Step-1 state: the remainder values and the staircase removed from them,
/// both top row first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseSplit {
    pub values: PaddedParts,
    pub staircase: Vec<u64>,
}

/// Every intermediate state of one application of the map.
///
/// The stages are those of the forward algorithm in both directions: an
/// inverse trace of `μ` holds the same `after_step1`, groups and
/// `after_step3` as the forward trace of its preimage, with `input` and
/// `output` exchanged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTrace {
    pub direction: Direction,
    pub pi: ResiduePermutation,
    pub input: Partition,
    pub after_step1: StaircaseSplit,
    #[serde(flatten)]
    pub after_step2: GroupedRows,
    /// Shifted rows in stack order, top first.
    pub after_step3: Vec<u64>,
    pub output: Partition,
}

pub fn trace(
    partition: &Partition,
    pi: &ResiduePermutation,
    direction: Direction,
) -> Result<StepTrace, BijectionError> {
    let gap = pi.gap();
    let (b, grouped, shifted, output) = match direction {
        Direction::Forward => {
            let b = staircase_subtract(partition, gap)?;
            let grouped = regroup_by_residue(&b, pi);
            let shifted = staircase_add(&grouped);
            let output = sort_parts(shifted.clone()).expect("shifted rows are positive");
            (b, grouped, shifted, output)
        }
        Direction::Inverse => {
            let grouped = unshift(partition, pi)?;
            let shifted = staircase_add(&grouped);
            let (b, output) = unsubtract(&grouped);
            (b, grouped, shifted, output)
        }
    };
    let m = b.m();
    Ok(StepTrace {
        direction,
        pi: pi.clone(),
        input: partition.clone(),
        after_step1: StaircaseSplit {
            values: b,
            staircase: staircase(m, gap),
        },
        after_step2: grouped,
        after_step3: shifted,
        output,
    })
}

impl StepTrace {
    /// The d-distinct end of the trace.
    pub fn distinct_side(&self) -> &Partition {
        match self.direction {
            Direction::Forward => &self.input,
            Direction::Inverse => &self.output,
        }
    }

    /// The target end of the trace.
    pub fn target_side(&self) -> &Partition {
        match self.direction {
            Direction::Forward => &self.output,
            Direction::Inverse => &self.input,
        }
    }

    /// Whether the boxes are accounted for at every stage.
    pub fn weights_reconcile(&self) -> bool {
        let n = self.input.weight();
        let stair: u64 = self.after_step1.staircase.iter().sum();
        let step2: u64 = self.after_step2.stack().sum();
        let step3: u64 = self.after_step3.iter().sum();
        stair + self.after_step1.values.sum() == n
            && stair + step2 == n
            && step3 == n
            && self.output.weight() == n
    }

    /// Draws every stage as a Young diagram, with a `|` column separating
    /// the staircase from the remainder where the two are split.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} d={} pi={}", self.direction, self.pi.d(), self.pi);
        let _ = writeln!(out, "input {}", self.input);
        match self.direction {
            Direction::Forward => {
                out.push_str(&self.input.render_young());
                let _ = writeln!(out, "step 1: subtract staircase");
                self.render_split(&mut out);
                let _ = writeln!(out, "step 2: regroup by residue");
                self.render_groups(&mut out, true);
                let _ = writeln!(out, "step 3: add staircase");
                self.render_groups(&mut out, false);
                let _ = writeln!(out, "step 4: sort");
                out.push_str(&self.output.render_young());
            }
            Direction::Inverse => {
                out.push_str(&self.input.render_young());
                let _ = writeln!(out, "undo step 4: regroup by residue");
                self.render_groups(&mut out, false);
                let _ = writeln!(out, "undo step 3: subtract staircase");
                self.render_groups(&mut out, true);
                let _ = writeln!(out, "undo step 2: sort");
                self.render_split(&mut out);
                let _ = writeln!(out, "undo step 1: add staircase");
                out.push_str(&self.output.render_young());
            }
        }
        let _ = writeln!(out, "output {}", self.output);
        out
    }

    fn stair_width(&self) -> usize {
        self.after_step1.staircase.first().copied().unwrap_or(0) as usize
    }

    fn render_split(&self, out: &mut String) {
        let split = &self.after_step1;
        render_rows(
            out,
            &split.staircase,
            split.values.values(),
            self.stair_width(),
        );
    }

    fn render_groups(&self, out: &mut String, split: bool) {
        let stair = &self.after_step1.staircase;
        let d = self.after_step2.d;
        let mut row = 0;
        let mut shifted = self.after_step3.iter();
        for g in &self.after_step2.groups {
            let k = g.values.len();
            let _ = if split {
                writeln!(
                    out,
                    "  [{} (mod {d}), rank {}]{}",
                    g.residue,
                    g.rank,
                    if k == 0 { " empty" } else { "" }
                )
            } else {
                writeln!(
                    out,
                    "  [{} (mod {d}), rank {}]{}",
                    g.target_residue,
                    g.rank,
                    if k == 0 { " empty" } else { "" }
                )
            };
            if split {
                render_rows(out, &stair[row..row + k], &g.values, self.stair_width());
            } else {
                for &v in shifted.by_ref().take(k) {
                    let _ = writeln!(out, "{}", boxes(v));
                }
            }
            row += k;
        }
    }
}

fn boxes(n: u64) -> String {
    std::iter::repeat_n(crate::partition::BOX, n as usize).collect()
}

fn render_rows(out: &mut String, staircase: &[u64], values: &[u64], width: usize) {
    for (&s, &v) in staircase.iter().zip(values) {
        let _ = writeln!(out, "{:<width$}|{}", boxes(s), boxes(v));
    }
}

impl fmt::Display for GroupedRows {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups = self
            .groups
            .iter()
            .map(|g| format!("{}:[{}]", g.residue, g.values.iter().format(",")))
            .format(" ");
        write!(f, "{groups}")
    }
}
