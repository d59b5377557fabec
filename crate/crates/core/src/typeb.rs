//! The type-B Coxeter group `B_n` of signed permutations: conjugacy classes,
//! square-root counts, parabolic subgroups and their double cosets.
//!
//! Generators follow the matrix model inside `S_2n`: `s_i` swaps `i, i+1`
//! (and `2n-i, 2n-i+1`) for `i < n`, and `s_n` swaps `n, n+1`, i.e. flips
//! the sign of the last coordinate.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{expect_integer, factorial, BigRatio};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::series::{ClassKey, ClassVector};
use crate::symgroup;

/// Conjugacy class of `B_n`: cycle lengths of the positive cycles and of the
/// negative cycles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SignedCycleType {
    pos: Partition,
    neg: Partition,
}

impl SignedCycleType {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        Self { pos, neg }
    }

    pub fn pos(&self) -> &Partition {
        &self.pos
    }

    pub fn neg(&self) -> &Partition {
        &self.neg
    }

    pub fn rank(&self) -> usize {
        self.pos.size() + self.neg.size()
    }

    /// `|B_n| / |C_{λ,μ}| = z_λ z_μ 2^{ℓ(λ)+ℓ(μ)}`.
    pub fn centralizer_size(&self) -> BigInt {
        self.pos.z() * self.neg.z() * (BigInt::one() << (self.pos.len() + self.neg.len()))
    }

    /// Class of the square of an element of this class.
    pub fn square(&self) -> Self {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for &k in self.pos.parts() {
            if k % 2 == 0 {
                pos.extend([k / 2, k / 2]);
            } else {
                pos.push(k);
            }
        }
        for &k in self.neg.parts() {
            if k % 2 == 0 {
                neg.extend([k / 2, k / 2]);
            } else {
                pos.push(k);
            }
        }
        Self::new(Partition::from_parts(pos), Partition::from_parts(neg))
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pos, self.neg)
    }
}

impl ClassKey for SignedCycleType {
    fn size(&self) -> usize {
        self.rank()
    }

    fn merge(&self, other: &Self) -> Self {
        Self::new(self.pos.merge(&other.pos), self.neg.merge(&other.neg))
    }

    fn unit() -> Self {
        Self::default()
    }
}

/// Cycle index of a subgroup of `B_n`, keyed by signed cycle type.
pub type BCycleIndex = ClassVector<SignedCycleType>;

/// `|B_n| = 2^n n!`.
pub fn b_order(n: usize) -> BigInt {
    factorial(n) << n
}

/// All conjugacy classes of `B_n`.
pub fn signed_cycle_types(n: usize) -> Vec<SignedCycleType> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for pos in partitions_of(a) {
            for neg in partitions_of(n - a) {
                out.push(SignedCycleType::new(pos.clone(), neg));
            }
        }
    }
    out
}

pub fn b_centralizer_size(c: &SignedCycleType) -> BigInt {
    c.centralizer_size()
}

/// Number of `x ∈ B_n` whose square is a fixed element of class `c`.
pub fn b_sq_count(c: &SignedCycleType) -> BigInt {
    let mut total = BigInt::one();
    for (k, m) in c.pos.runs() {
        if k % 2 == 0 {
            if m % 2 == 1 {
                return BigInt::zero();
            }
            total *= factorial(m) * num_traits::pow(BigInt::from(k), m / 2) / factorial(m / 2);
        } else {
            let mut exact = BigInt::zero();
            for i in 0..=m / 2 {
                exact += factorial(m)
                    * num_traits::pow(BigInt::from(k), i)
                    * (BigInt::one() << (m - 2 * i))
                    / (factorial(i) * factorial(m - 2 * i));
            }
            total *= exact;
        }
    }
    for (k, m) in c.neg.runs() {
        if m % 2 == 1 {
            return BigInt::zero();
        }
        total *= factorial(m) * num_traits::pow(BigInt::from(k), m / 2) / factorial(m / 2);
    }
    total
}

/// Cycle index of the whole of `B_k`: coefficient `1/centralizer` at every
/// class.
pub fn full_cycle_index(k: usize) -> BCycleIndex {
    BCycleIndex::from_entries(
        k,
        signed_cycle_types(k).into_iter().map(|c| {
            let z = c.centralizer_size();
            (c, BigRatio::new(BigInt::one(), z))
        }),
    )
}

/// A set `I` of simple generators `s_i`, `1 <= i <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSubset {
    n: usize,
    indices: BTreeSet<usize>,
}

impl ParabolicSubset {
    pub fn new(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        Ok(Self { n, indices })
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            indices: (1..=n).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            indices: BTreeSet::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }
}

/// Splits `W_I ≅ B_k × S_{κ₁} × S_{κ₂} × …`: `k` is the length of the run of
/// consecutive generators ending at `s_n`, and each other run of length `ℓ`
/// contributes a part `ℓ+1`; the remaining coordinates are parts `1`.
pub fn parabolic_decompose(p: &ParabolicSubset) -> (usize, Partition) {
    let n = p.n;
    let mut runs: Vec<(usize, usize)> = Vec::new(); // (start, len)
    for &i in &p.indices {
        match runs.last_mut() {
            Some((start, len)) if *start + *len == i => *len += 1,
            _ => runs.push((i, 1)),
        }
    }
    let mut k = 0;
    let mut parts = Vec::new();
    for (start, len) in runs {
        if start + len - 1 == n {
            k = len;
        } else {
            parts.push(len as u32 + 1);
        }
    }
    let used: usize = k + parts.iter().map(|&x| x as usize).sum::<usize>();
    parts.extend(std::iter::repeat_n(1, n - used));
    (k, Partition::from_parts(parts))
}

/// Cycle index of the parabolic subgroup `W_I`. Negative cycles only come
/// from the `B_k` factor; the symmetric factors contribute positive cycles.
pub fn parabolic_cycle_index(p: &ParabolicSubset) -> BCycleIndex {
    let (k, kappa) = parabolic_decompose(p);
    let young = symgroup::zindex_young(&kappa);
    let lifted = BCycleIndex::from_entries(
        young.degree(),
        young.iter().map(|(nu, c)| {
            (
                SignedCycleType::new(nu.clone(), Partition::empty()),
                c.clone(),
            )
        }),
    );
    full_cycle_index(k).product(&lifted)
}

/// `|W_I\B_n/W_J|` from two cycle indices.
pub fn count_double_cosets_from_indices(zi: &BCycleIndex, zj: &BCycleIndex) -> Result<BigInt> {
    if zi.degree() != zj.degree() {
        return Err(Error::RankMismatch(zi.degree(), zj.degree()));
    }
    let common: Vec<_> = zi
        .iter()
        .filter_map(|(c, a)| zj.get(c).map(|b| (c, a, b)))
        .collect();
    let terms: Vec<BigRatio> = common
        .par_iter()
        .map(|(c, a, b)| BigRatio::from_integer(c.centralizer_size()) * *a * *b)
        .collect();
    let total = terms.into_iter().fold(BigRatio::zero(), |acc, t| acc + t);
    Ok(expect_integer(total, "type-B double coset count"))
}

/// `Σ_c Z[c] · Sq(C_c)`.
pub fn count_self_inverse_from_index(zi: &BCycleIndex) -> BigInt {
    let entries: Vec<_> = zi.iter().collect();
    let terms: Vec<BigRatio> = entries
        .par_iter()
        .map(|(c, a)| BigRatio::from_integer(b_sq_count(c)) * *a)
        .collect();
    let total = terms.into_iter().fold(BigRatio::zero(), |acc, t| acc + t);
    expect_integer(total, "type-B self-inverse count")
}

pub fn b_count_double_cosets(p: &ParabolicSubset, q: &ParabolicSubset) -> Result<BigInt> {
    if p.n != q.n {
        return Err(Error::RankMismatch(p.n, q.n));
    }
    count_double_cosets_from_indices(&parabolic_cycle_index(p), &parabolic_cycle_index(q))
}

pub fn b_count_self_inverse(p: &ParabolicSubset) -> BigInt {
    count_self_inverse_from_index(&parabolic_cycle_index(p))
}
