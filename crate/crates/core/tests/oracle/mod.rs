//! Reference computations that share no code with the library.
#![allow(dead_code)]

use std::collections::HashMap;

/// p(0..=n_max) by Euler's pentagonal-number recurrence.
pub fn pentagonal_counts(n_max: usize) -> Vec<u64> {
    let mut p = vec![0i64; n_max + 1];
    p[0] = 1;
    for i in 1..=n_max {
        let mut sum = 0i64;
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                sum += sign * p[i - g2];
            }
        }
        p[i] = sum;
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// All partitions of `n` as part lists, largest first, built by recursion on
/// the smallest part.
pub fn brute_partitions(n: u64) -> Vec<Vec<u64>> {
    fn grow(remaining: u64, min: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(acc.iter().rev().copied().collect());
            return;
        }
        for part in min..=remaining {
            acc.push(part);
            grow(remaining - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n` whose parts pairwise differ by at least `d`,
/// by memoized recursion on the largest part.
pub fn d_distinct_count(n: u64, d: u64) -> u64 {
    fn go(remaining: u64, max: u64, d: u64, memo: &mut HashMap<(u64, u64), u64>) -> u64 {
        if remaining == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(remaining, max)) {
            return v;
        }
        let mut total = 0;
        for largest in 1..=max.min(remaining) {
            let next_max = largest.saturating_sub(d);
            total += go(remaining - largest, next_max, d, memo);
        }
        memo.insert((remaining, max), total);
        total
    }
    go(n, n, d, &mut HashMap::new())
}

/// Sets of distinct positive integers summing to `n`, largest first.
pub fn distinct_part_sets(n: u64) -> Vec<Vec<u64>> {
    fn pick(remaining: u64, below: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..below.min(remaining + 1)).rev() {
            acc.push(part);
            pick(remaining - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    pick(n, n + 1, &mut Vec::new(), &mut out);
    out
}

/// The residue-threshold conditions read literally: each part congruent to
/// `image[s]` exceeds `d` times the number of parts congruent to any of
/// `image[0..s]`.
pub fn conditions_hold(parts: &[u64], image: &[usize]) -> bool {
    let d = image.len() as u64;
    let distinct = parts.windows(2).all(|w| w[0] != w[1]);
    distinct
        && parts.iter().all(|&x| {
            let s = image.iter().position(|&r| r as u64 == x % d).unwrap();
            let earlier = &image[..s];
            let below = parts
                .iter()
                .filter(|&&y| earlier.contains(&((y % d) as usize)))
                .count() as u64;
            x > d * below
        })
}

pub fn target_count(n: u64, image: &[usize]) -> u64 {
    distinct_part_sets(n)
        .iter()
        .filter(|parts| conditions_hold(parts, image))
        .count() as u64
}

/// Every permutation of `0..d` as an image list, by Heap's algorithm.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    let mut out = Vec::new();
    heap(d, &mut (0..d).collect(), &mut out);
    out
}
