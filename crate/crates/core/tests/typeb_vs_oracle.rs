use std::collections::BTreeMap;

use dcosets::arith::BigRatio;
use dcosets::oracle::{
    brute_double_cosets, brute_self_inverse, brute_signed_cycle_type, brute_signed_group,
    brute_signed_parabolic, brute_sq_roots,
};
use dcosets::typeb::{
    b_count_double_cosets, b_count_self_inverse, b_sq_count, parabolic_cycle_index, BCycleIndex,
    ParabolicSubset, SignedCycleType,
};
use dcosets::BigInt;

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n)
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

#[test]
fn square_roots_match_enumeration() {
    for n in 1..=4 {
        let b = brute_signed_group(n);
        let mut seen = BTreeMap::new();
        for g in b.elements() {
            let (pos, neg) = brute_signed_cycle_type(g);
            seen.entry(SignedCycleType::new(pos, neg))
                .or_insert_with(|| brute_sq_roots(&b, g));
        }
        assert_eq!(seen.len(), dcosets::typeb::signed_cycle_types(n).len());
        for (c, count) in seen {
            assert_eq!(b_sq_count(&c), BigInt::from(count), "{c}");
        }
    }
}

#[test]
fn parabolic_cycle_indices_match_enumeration() {
    for n in 1..=4 {
        for s in subsets(n) {
            let w = brute_signed_parabolic(n, &s);
            let mut counts: BTreeMap<SignedCycleType, usize> = BTreeMap::new();
            for g in w.elements() {
                let (pos, neg) = brute_signed_cycle_type(g);
                *counts.entry(SignedCycleType::new(pos, neg)).or_default() += 1;
            }
            let brute = BCycleIndex::from_entries(
                n,
                counts
                    .into_iter()
                    .map(|(c, k)| (c, BigRatio::new(BigInt::from(k), BigInt::from(w.order())))),
            );
            let set = ParabolicSubset::new(n, s.iter().copied()).unwrap();
            assert_eq!(parabolic_cycle_index(&set), brute, "n={n} I={s:?}");
        }
    }
}

#[test]
fn parabolic_counts_match_enumeration() {
    for n in 1..=3 {
        let b = brute_signed_group(n);
        let all = subsets(n);
        let groups: Vec<_> = all.iter().map(|s| brute_signed_parabolic(n, s)).collect();
        for (i, si) in all.iter().enumerate() {
            let pi = ParabolicSubset::new(n, si.iter().copied()).unwrap();
            assert_eq!(
                b_count_self_inverse(&pi),
                BigInt::from(brute_self_inverse(&b, groups[i].elements()).unwrap())
            );
            for (j, sj) in all.iter().enumerate() {
                let pj = ParabolicSubset::new(n, sj.iter().copied()).unwrap();
                let brute =
                    brute_double_cosets(&b, groups[i].elements(), groups[j].elements()).unwrap();
                assert_eq!(
                    b_count_double_cosets(&pi, &pj).unwrap(),
                    BigInt::from(brute.len())
                );
            }
        }
    }
    // a few rank-4 pairs
    let b = brute_signed_group(4);
    for (si, sj) in [
        (vec![1, 3], vec![4]),
        (vec![2, 3, 4], vec![1]),
        (vec![], vec![1, 2, 3]),
    ] {
        let (gi, gj) = (
            brute_signed_parabolic(4, &si),
            brute_signed_parabolic(4, &sj),
        );
        let brute = brute_double_cosets(&b, gi.elements(), gj.elements())
            .unwrap()
            .len();
        let (pi, pj) = (
            ParabolicSubset::new(4, si.clone()).unwrap(),
            ParabolicSubset::new(4, sj.clone()).unwrap(),
        );
        assert_eq!(
            b_count_double_cosets(&pi, &pj).unwrap(),
            BigInt::from(brute)
        );
        assert_eq!(
            b_count_self_inverse(&pi),
            BigInt::from(brute_self_inverse(&b, gi.elements()).unwrap())
        );
    }
}
