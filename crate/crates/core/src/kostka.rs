//! Sums of products of Kostka numbers, computed from Young cycle indices
//! alone.
//!
//! With `α_ν = Σ_{λ⊢n} Z_{S_λ}[ν]` the three sequences below count
//! nonnegative integer matrices with sum `n` and no zero row or column, the
//! symmetric ones among them, and 0/1 matrices with sum `n`, no zero row or
//! column and non-increasing row and column sums.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{expect_integer, BigRatio};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::series::{pv_product, PartitionVector};
use crate::symgroup::{self, sq_count, zindex_young};

/// `α_ν` for every `ν ⊢ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    pub n: usize,
    pub values: BTreeMap<Partition, BigRatio>,
}

impl AlphaTable {
    pub fn get(&self, nu: &Partition) -> BigRatio {
        self.values.get(nu).cloned().unwrap_or_else(BigRatio::zero)
    }
}

/// Sums the Young cycle indices of all `λ ⊢ n`.
pub fn alpha_table(n: usize) -> AlphaTable {
    let parts = partitions_of(n);
    let indices: Vec<PartitionVector> = parts.par_iter().map(zindex_young).collect();
    let mut sum = PartitionVector::zero(n);
    for z in &indices {
        sum.add_assign(z);
    }
    let mut values: BTreeMap<Partition, BigRatio> =
        parts.into_iter().map(|p| (p, BigRatio::zero())).collect();
    for (nu, c) in sum.iter() {
        values.insert(nu.clone(), c.clone());
    }
    AlphaTable { n, values }
}

/// Same table read off the degree-`n` part of `∏_k (1 - s_k)^{-1}`, where
/// `s_k = Σ_{ν⊢k} x_ν/z_ν`.
pub fn alpha_table_by_series(n: usize) -> AlphaTable {
    // graded[d] is the degree-d component of the running product
    let mut graded: Vec<PartitionVector> = (0..=n).map(PartitionVector::zero).collect();
    graded[0] = PartitionVector::one();
    for k in 1..=n {
        let s = symgroup::zindex_symmetric(k);
        let mut next = graded.clone();
        // multiplying by 1/(1 - s) is the recurrence next[d] = graded[d] + s * next[d-k]
        for d in k..=n {
            let term = pv_product(&s, &next[d - k]);
            next[d].add_assign(&term);
        }
        graded = next;
    }
    let top = graded.pop().expect("graded series has a degree-n part");
    let mut values: BTreeMap<Partition, BigRatio> = partitions_of(n)
        .into_iter()
        .map(|p| (p, BigRatio::zero()))
        .collect();
    for (nu, c) in top.iter() {
        values.insert(nu.clone(), c.clone());
    }
    AlphaTable { n, values }
}

fn alpha_sum(
    n: usize,
    weight: impl Fn(&Partition, &BigRatio) -> BigRatio + Sync,
    what: &str,
) -> BigInt {
    let table = alpha_table(n);
    let entries: Vec<_> = table.values.iter().collect();
    let total = entries
        .par_iter()
        .map(|(nu, a)| weight(nu, a))
        .reduce(BigRatio::zero, |x, y| x + y);
    expect_integer(total, what)
}

/// Nonnegative integer matrices with sum `n` and no zero row or column.
pub fn seq_a321652(n: usize) -> BigInt {
    alpha_sum(n, |nu, a| a * a * BigRatio::from_integer(nu.z()), "A321652")
}

/// Symmetric nonnegative integer matrices with sum `n` and no zero row or
/// column.
pub fn seq_a178718(n: usize) -> BigInt {
    alpha_sum(
        n,
        |nu, a| a * BigRatio::from_integer(sq_count(nu)),
        "A178718",
    )
}

/// 0/1 matrices with sum `n`, no zero row or column, and non-increasing row
/// and column sums.
pub fn seq_a068313(n: usize) -> BigInt {
    alpha_sum(
        n,
        |nu, a| a * a * BigRatio::from_integer(nu.z() * symgroup::signature(nu)),
        "A068313",
    )
}

/// `|S_λ \ S_n / S_μ| = Σ_ν K_{νλ} K_{νμ}`.
pub fn parabolic_double_cosets(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    symgroup::count_double_cosets(&zindex_young(lambda), &zindex_young(mu))
}

/// Self-inverse double cosets in `S_λ \ S_n / S_λ`, equal to `Σ_ν K_{νλ}`.
pub fn parabolic_self_inverse(lambda: &Partition) -> BigInt {
    symgroup::count_self_inverse(&zindex_young(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_tables() {
        let t1 = alpha_table(1);
        assert_eq!(t1.get(&p("1")), ratio(1, 1));
        let t2 = alpha_table(2);
        assert_eq!(t2.get(&p("1,1")), ratio(3, 2));
        assert_eq!(t2.get(&p("2")), ratio(1, 2));
        assert_eq!(alpha_table(3).get(&p("1,1,1")), ratio(5, 3));
    }

    #[test]
    fn both_paths_agree() {
        for n in 1..=10 {
            let t = alpha_table(n);
            assert!(t.values.values().all(|a| a > &BigRatio::zero()));
            assert_eq!(t, alpha_table_by_series(n), "n = {n}");
        }
    }

    #[test]
    fn sequences() {
        let a321652: Vec<u64> = (1..=10)
            .map(|n| seq_a321652(n).try_into().unwrap())
            .collect();
        assert_eq!(a321652[0], 1);
        assert_eq!(a321652[3], 107);
        assert_eq!(a321652[9], 23378901);
        assert_eq!(seq_a178718(2), BigInt::from(3));
        assert_eq!(seq_a178718(6), BigInt::from(182));
        assert_eq!(seq_a178718(10), BigInt::from(24537));
        assert_eq!(seq_a068313(1), BigInt::from(1));
    }

    #[test]
    fn parabolic_examples() {
        assert_eq!(
            parabolic_double_cosets(&p("4"), &p("4")).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            parabolic_double_cosets(&p("2,1"), &p("2,1")).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(parabolic_self_inverse(&p("2,2")), BigInt::from(3));
        assert!(matches!(
            parabolic_double_cosets(&p("2"), &p("2,1")),
            Err(Error::SizeMismatch(2, 3))
        ));
    }

    #[test]
    fn transpose_symmetry() {
        for n in 1..=8 {
            let parts = partitions_of(n);
            for l in &parts {
                for m in &parts {
                    assert_eq!(
                        parabolic_double_cosets(l, m).unwrap(),
                        parabolic_double_cosets(m, l).unwrap()
                    );
                }
            }
        }
    }
}
