//! Sparse exact-rational vectors indexed by conjugacy-class labels.
//!
//! A cycle index of a subgroup `H` of an ambient group is stored as the map
//! `C ↦ |H ∩ C| / |H|`. Class labels of the direct product of two subgroups
//! are obtained by merging labels, so the cycle index of `H₁ × H₂` is the
//! product of the two vectors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::BigRatio;
use crate::partition::Partition;

/// A conjugacy-class label that can be combined across a direct product.
pub trait ClassKey: Clone + Ord {
    /// The rank `n` of the ambient group this label belongs to.
    fn size(&self) -> usize;
    /// Label of the product of an element of class `self` (acting on the
    /// first block) with an element of class `other` (acting on the second).
    fn merge(&self, other: &Self) -> Self;
    /// Label of the identity of the rank-0 group.
    fn unit() -> Self;
}

impl ClassKey for Partition {
    fn size(&self) -> usize {
        Partition::size(self)
    }

    fn merge(&self, other: &Self) -> Self {
        Partition::merge(self, other)
    }

    fn unit() -> Self {
        Partition::empty()
    }
}

/// Sparse map from class labels of one fixed size to nonzero rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassVector<K: ClassKey> {
    degree: usize,
    coeffs: BTreeMap<K, BigRatio>,
}

/// Cycle index of a subgroup of `S_n`, keyed by cycle type.
pub type PartitionVector = ClassVector<Partition>;

impl<K: ClassKey> ClassVector<K> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The multiplicative identity: unit mass at the empty label.
    pub fn one() -> Self {
        Self::unit_at(K::unit())
    }

    pub fn unit_at(key: K) -> Self {
        let mut v = Self::zero(key.size());
        v.coeffs.insert(key, BigRatio::one());
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `value` at `key`, dropping the entry if the sum vanishes.
    ///
    /// Panics if `key` has the wrong size.
    pub fn add(&mut self, key: K, value: BigRatio) {
        assert_eq!(key.size(), self.degree, "class label of wrong size");
        if value.is_zero() {
            return;
        }
        match self.coeffs.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn get(&self, key: &K) -> Option<&BigRatio> {
        self.coeffs.get(key)
    }

    pub fn coeff(&self, key: &K) -> BigRatio {
        self.coeffs.get(key).cloned().unwrap_or_else(BigRatio::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigRatio)> {
        self.coeffs.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn total(&self) -> BigRatio {
        self.coeffs
            .values()
            .fold(BigRatio::zero(), |acc, v| acc + v)
    }

    pub fn scaled(&self, factor: &BigRatio) -> Self {
        let mut out = Self::zero(self.degree);
        if factor.is_zero() {
            return out;
        }
        for (k, v) in &self.coeffs {
            out.coeffs.insert(k.clone(), v * factor);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(
            self.degree, other.degree,
            "adding vectors of different degree"
        );
        for (k, v) in &other.coeffs {
            self.add(k.clone(), v.clone());
        }
    }

    /// Product over a direct product of groups: every pair of supported
    /// labels is merged and the coefficients multiply.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add(a.merge(b), x * y);
            }
        }
        out
    }

    pub fn from_entries(degree: usize, entries: impl IntoIterator<Item = (K, BigRatio)>) -> Self {
        let mut out = Self::zero(degree);
        for (k, v) in entries {
            out.add(k, v);
        }
        out
    }
}

impl<K: ClassKey + fmt::Display> fmt::Display for ClassVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {v}")?;
        }
        write!(f, "}}")
    }
}

impl<K: ClassKey + fmt::Debug> fmt::Debug for ClassVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

/// Product of two symmetric-group cycle indices.
pub fn pv_product(f: &PartitionVector, g: &PartitionVector) -> PartitionVector {
    f.product(g)
}

/// Coefficient of `target` in `f · g`, computed from the definition: sum over
/// the sub-multisets of the parts of `target` of size `degree(f)` (chosen by
/// multiplicity vector) of `f[sub] · g[complement]`.
pub fn product_coefficient(
    f: &PartitionVector,
    g: &PartitionVector,
    target: &Partition,
) -> BigRatio {
    let runs = target.runs();
    let mut total = BigRatio::zero();
    let mut take = vec![0usize; runs.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (&(k, m), &t) in runs.iter().zip(&take) {
            left.extend(std::iter::repeat_n(k, t));
            right.extend(std::iter::repeat_n(k, m - t));
        }
        let left = Partition::from_parts(left);
        if left.size() == f.degree() {
            let right = Partition::from_parts(right);
            if let (Some(x), Some(y)) = (f.get(&left), g.get(&right)) {
                total += x * y;
            }
        }
        // odometer over 0..=m_k
        let mut i = 0;
        loop {
            if i == runs.len() {
                return total;
            }
            if take[i] < runs[i].1 {
                take[i] += 1;
                break;
            }
            take[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::partition::partitions_of;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sym(n: usize) -> PartitionVector {
        PartitionVector::from_entries(
            n,
            partitions_of(n).into_iter().map(|l| {
                let z = l.z();
                (l, BigRatio::new(1.into(), z))
            }),
        )
    }

    #[test]
    fn identity_element() {
        let g = sym(3);
        assert_eq!(pv_product(&PartitionVector::one(), &g), g);
        assert_eq!(pv_product(&g, &PartitionVector::one()), g);
    }

    #[test]
    fn small_products() {
        let s1 = sym(1);
        let prod = pv_product(&s1, &s1);
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.coeff(&p("1,1")), ratio(1, 1));

        let prod = pv_product(&sym(2), &sym(1));
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.coeff(&p("1,1,1")), ratio(1, 2));
        assert_eq!(prod.coeff(&p("2,1")), ratio(1, 2));
    }

    #[test]
    fn zero_entries_are_dropped() {
        let mut v = PartitionVector::zero(2);
        v.add(p("2"), ratio(1, 3));
        v.add(p("2"), ratio(-1, 3));
        assert!(v.is_empty());
    }

    fn arb_vector(n: usize) -> impl Strategy<Value = PartitionVector> {
        let keys = partitions_of(n);
        let k = keys.len();
        proptest::collection::vec((-3i64..4, 1i64..5), k).prop_map(move |vals| {
            PartitionVector::from_entries(
                n,
                keys.iter()
                    .cloned()
                    .zip(vals)
                    .map(|(key, (a, b))| (key, ratio(a, b))),
            )
        })
    }

    proptest! {
        #[test]
        fn product_commutes_and_associates(
            (f, g, h) in (0usize..=3, 0usize..=3, 0usize..=2)
                .prop_flat_map(|(a, b, c)| (arb_vector(a), arb_vector(b), arb_vector(c)))
        ) {
            prop_assert_eq!(pv_product(&f, &g), pv_product(&g, &f));
            prop_assert_eq!(
                pv_product(&pv_product(&f, &g), &h),
                pv_product(&f, &pv_product(&g, &h))
            );
        }

        #[test]
        fn product_matches_splitting_definition(
            (f, g) in (0usize..=4, 0usize..=3).prop_flat_map(|(a, b)| (arb_vector(a), arb_vector(b)))
        ) {
            let prod = pv_product(&f, &g);
            for target in partitions_of(f.degree() + g.degree()) {
                prop_assert_eq!(prod.coeff(&target), product_coefficient(&f, &g, &target));
            }
        }
    }
}
