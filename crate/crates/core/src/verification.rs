//! Exhaustive checks of the partition identities at desk scale.
//!
//! For each `(n, d, π)` both sides of the identity are enumerated, the
//! forward map is applied to every d-distinct partition and the result is
//! checked for membership, injectivity and both roundtrips. Bounds of
//! `n ≤ 40` and `d ≤ 5` run in seconds.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijection::{forward, inverse};
use crate::enumeration::partitions_of;
use crate::partition::{Partition, ResiduePermutation};

/// Witnesses kept per report.
pub const MAX_WITNESSES: usize = 10;

/// The partitions of one `n`, enumerated once and shared by every `(d, π)`
/// check at that weight.
#[derive(Debug, Clone)]
pub struct WeightClass {
    pub n: u64,
    pub all: Vec<Partition>,
    /// The 1-distinct members of `all`, same order.
    pub distinct: Vec<Partition>,
}

impl WeightClass {
    pub fn new(n: u64) -> Self {
        let all: Vec<Partition> = partitions_of(n).collect();
        let distinct = all.iter().filter(|p| p.is_distinct()).cloned().collect();
        Self { n, all, distinct }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// forward rejected a d-distinct partition.
    ForwardFailed,
    /// forward image outside the target set.
    NotInTarget,
    /// forward image already produced by an earlier partition.
    Collision,
    /// inverse(forward(λ)) ≠ λ.
    ForwardInverse,
    /// inverse rejected a target partition.
    InverseFailed,
    /// forward(inverse(μ)) ≠ μ.
    InverseForward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: Check,
    pub partition: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: u64,
    pub d: usize,
    pub pi: ResiduePermutation,
    /// d-distinct partitions of `n`.
    pub count_left: u64,
    /// Distinct partitions of `n` satisfying the conditions of `pi`.
    pub count_right: u64,
    pub forward_total: bool,
    pub injective: bool,
    pub roundtrip_fwd_inv: bool,
    pub roundtrip_inv_fwd: bool,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.count_left == self.count_right
            && self.forward_total
            && self.injective
            && self.roundtrip_fwd_inv
            && self.roundtrip_inv_fwd
            && self.witnesses.is_empty()
    }

    fn witness(&mut self, check: Check, partition: &Partition) {
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                check,
                partition: partition.clone(),
            });
        }
    }

    /// One JSON object with an added `passed` field.
    pub fn to_json_line(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            #[serde(flatten)]
            report: &'a VerificationReport,
            passed: bool,
        }
        serde_json::to_string(&Line {
            report: self,
            passed: self.passes(),
        })
        .expect("report serializes")
    }
}

pub fn verify_identity(n: u64, pi: &ResiduePermutation) -> VerificationReport {
    verify_identity_in(&WeightClass::new(n), pi)
}

pub fn verify_identity_in(class: &WeightClass, pi: &ResiduePermutation) -> VerificationReport {
    let gap = pi.gap();
    let left: Vec<&Partition> = class.all.iter().filter(|p| p.is_d_distinct(gap)).collect();
    let right: Vec<&Partition> = class
        .distinct
        .iter()
        .filter(|p| p.satisfies_conditions(pi))
        .collect();
    let right_set: HashSet<&Partition> = right.iter().copied().collect();

    let mut report = VerificationReport {
        n: class.n,
        d: pi.d(),
        pi: pi.clone(),
        count_left: left.len() as u64,
        count_right: right.len() as u64,
        forward_total: true,
        injective: true,
        roundtrip_fwd_inv: true,
        roundtrip_inv_fwd: true,
        witnesses: Vec::new(),
    };

    let mut images = HashSet::with_capacity(left.len());
    for &lambda in &left {
        let image = match forward(lambda, pi) {
            Ok(image) => image,
            Err(_) => {
                report.forward_total = false;
                report.witness(Check::ForwardFailed, lambda);
                continue;
            }
        };
        if !right_set.contains(&image) {
            report.forward_total = false;
            report.witness(Check::NotInTarget, lambda);
        }
        if inverse(&image, pi).as_ref() != Ok(lambda) {
            report.roundtrip_fwd_inv = false;
            report.witness(Check::ForwardInverse, lambda);
        }
        if !images.insert(image) {
            report.injective = false;
            report.witness(Check::Collision, lambda);
        }
    }

    for &mu in &right {
        match inverse(mu, pi) {
            Ok(pre) => {
                if forward(&pre, pi).as_ref() != Ok(mu) {
                    report.roundtrip_inv_fwd = false;
                    report.witness(Check::InverseForward, mu);
                }
            }
            Err(_) => {
                report.roundtrip_inv_fwd = false;
                report.witness(Check::InverseFailed, mu);
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeSummary {
    pub n_max: u64,
    pub d_max: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone)]
pub struct RangeReport {
    /// Sorted by `(n, d, π)`.
    pub reports: Vec<VerificationReport>,
    pub summary: RangeSummary,
}

impl RangeReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Runs [`verify_identity`] for every `n ≤ n_max`, `1 ≤ d ≤ d_max` and every
/// permutation of `0..d`. Weights are processed in parallel.
pub fn verify_range(n_max: u64, d_max: usize) -> RangeReport {
    let start = Instant::now();
    let perms: Vec<ResiduePermutation> = (1..=d_max).flat_map(ResiduePermutation::all).collect();
    let mut reports: Vec<VerificationReport> = (0..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            let class = WeightClass::new(n);
            perms
                .iter()
                .map(|pi| verify_identity_in(&class, pi))
                .collect::<Vec<_>>()
        })
        .collect();
    reports.sort_by(|a, b| (a.n, a.d, &a.pi).cmp(&(b.n, b.d, &b.pi)));
    let passed = reports.iter().filter(|r| r.passes()).count();
    let summary = RangeSummary {
        n_max,
        d_max,
        total: reports.len(),
        passed,
        failed: reports.len() - passed,
        elapsed_ms: start.elapsed().as_millis(),
    };
    RangeReport { reports, summary }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub n: u64,
    pub m: u64,
    pub count_at_most_m_parts: u64,
    pub count_parts_at_most_m: u64,
    /// conjugate maps each set into the other and is injective on both.
    pub conjugate_bijects: bool,
}

impl LemmaReport {
    pub fn passes(&self) -> bool {
        self.count_at_most_m_parts == self.count_parts_at_most_m && self.conjugate_bijects
    }
}

/// Partitions of `n` with at most `m` parts against partitions of `n` with
/// every part at most `m`, paired by conjugation.
pub fn verify_lemma_conjugate(n: u64, m: u64) -> LemmaReport {
    verify_lemma_conjugate_in(&WeightClass::new(n), m)
}

pub fn verify_lemma_conjugate_in(class: &WeightClass, m: u64) -> LemmaReport {
    let few_parts: HashSet<&Partition> = class.all.iter().filter(|p| p.len() as u64 <= m).collect();
    let small_parts: HashSet<&Partition> = class.all.iter().filter(|p| p.largest() <= m).collect();
    let maps_into = |from: &HashSet<&Partition>, to: &HashSet<&Partition>| {
        let images: HashSet<Partition> = from.iter().map(|p| p.conjugate()).collect();
        images.len() == from.len() && images.iter().all(|p| to.contains(p))
    };
    LemmaReport {
        n: class.n,
        m,
        count_at_most_m_parts: few_parts.len() as u64,
        count_parts_at_most_m: small_parts.len() as u64,
        conjugate_bijects: maps_into(&few_parts, &small_parts)
            && maps_into(&small_parts, &few_parts),
    }
}
