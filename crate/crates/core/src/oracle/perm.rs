//! Permutations as raw image vectors, kept apart from `permgroup`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::ExplicitGroup;
use crate::arith::BigRatio;
use crate::partition::Partition;
use crate::series::PartitionVector;

/// Images of `0..n`.
pub type PermVec = Vec<u8>;

/// `(a·b)(i) = a(b(i))`.
fn compose(a: &PermVec, b: &PermVec) -> PermVec {
    b.iter().map(|&i| a[i as usize]).collect()
}

/// All of `S_n`, listed by repeated next-permutation.
pub fn brute_symmetric(n: usize) -> ExplicitGroup<PermVec> {
    let mut cur: PermVec = (0..n as u8).collect();
    let mut all = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        all.push(cur.clone());
    }
    ExplicitGroup::new(all, (0..n as u8).collect(), compose)
}

pub fn perm_group_from_generators(gens: &[PermVec]) -> ExplicitGroup<PermVec> {
    let n = gens.first().map_or(0, Vec::len);
    ExplicitGroup::generated_by(gens, (0..n as u8).collect(), compose)
}

fn cycles(p: &PermVec) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if !seen[s] {
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = p[i] as usize;
            }
            out.push(c);
        }
    }
    out
}

pub fn brute_cycle_type(p: &PermVec) -> Partition {
    Partition::from_parts(cycles(p).iter().map(|c| c.len() as u32).collect())
}

/// Cycle-type distribution of a list of permutations.
pub fn brute_cycle_index(elements: &[PermVec]) -> PartitionVector {
    let mut counts: BTreeMap<Partition, usize> = BTreeMap::new();
    for p in elements {
        *counts.entry(brute_cycle_type(p)).or_default() += 1;
    }
    let n = elements.first().map_or(0, Vec::len);
    PartitionVector::from_entries(
        n,
        counts.into_iter().map(|(k, c)| {
            (
                k,
                BigRatio::new(BigInt::from(c), BigInt::from(elements.len())),
            )
        }),
    )
}

/// Simple reflections of `B_n` acting on `2n` points, point `j` being
/// mirrored to `2n-1-j`: for `i < n`, `s_i` swaps `i-1, i` and their
/// mirrors; `s_n` swaps the middle pair.
fn signed_generator(n: usize, i: usize) -> PermVec {
    let mut p: PermVec = (0..2 * n as u8).collect();
    if i == n {
        p.swap(n - 1, n);
    } else {
        p.swap(i - 1, i);
        p.swap(2 * n - i, 2 * n - i - 1);
    }
    p
}

/// `B_n` as the centrally symmetric permutations of `2n` points.
pub fn brute_signed_group(n: usize) -> ExplicitGroup<PermVec> {
    let gens: Vec<PermVec> = (1..=n).map(|i| signed_generator(n, i)).collect();
    if gens.is_empty() {
        return ExplicitGroup::new(vec![Vec::new()], Vec::new(), compose);
    }
    perm_group_from_generators(&gens)
}

/// The parabolic subgroup generated by `{s_i : i ∈ subset}`.
pub fn brute_signed_parabolic(n: usize, subset: &[usize]) -> ExplicitGroup<PermVec> {
    let gens: Vec<PermVec> = subset.iter().map(|&i| signed_generator(n, i)).collect();
    ExplicitGroup::generated_by(&gens, (0..2 * n as u8).collect(), compose)
}

/// Signed cycle type `(positive, negative)` of a centrally symmetric
/// permutation: a mirror-closed cycle of length `2k` is a negative
/// `k`-cycle, a mirrored pair of `k`-cycles is a positive `k`-cycle.
pub fn brute_signed_cycle_type(p: &PermVec) -> (Partition, Partition) {
    let m = p.len();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for c in cycles(p) {
        let closed = c.contains(&(m - 1 - c[0]));
        if closed {
            neg.push(c.len() as u32 / 2);
        } else if c.iter().min() < c.iter().map(|x| m - 1 - x).min().as_ref() {
            // count each mirrored pair once, via its smallest point
            pos.push(c.len() as u32);
        }
    }
    (Partition::from_parts(pos), Partition::from_parts(neg))
}
