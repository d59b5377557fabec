//! Cycle indices of subgroups of `GL_n(F_q)`, keyed by conjugacy class.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::classes::{
    class_size_inverse_z, class_type, enumerate_classes, gl_order, ClassType, GLClass,
};
use super::factor::factor_x_pow_minus_one;
use super::field::FieldSpec;
use crate::arith::BigRatio;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::series::{ClassKey, ClassVector};

pub type GLCycleIndex = ClassVector<GLClass>;

/// Cycle index of all of `GL_n(F_q)`: `1/z_f` at every class.
pub fn zindex_gl(field: &FieldSpec, n: usize) -> GLCycleIndex {
    GLCycleIndex::from_entries(
        n,
        enumerate_classes(field, n).into_iter().map(|f| {
            let z = class_size_inverse_z(field.q(), &f);
            (f, BigRatio::new(BigInt::one(), z))
        }),
    )
}

/// Cycle index of the block-diagonal subgroup `GL_λ = ∏ GL_{λ_i}`.
pub fn zindex_gl_young(lambda: &Partition, field: &FieldSpec) -> GLCycleIndex {
    let mut cache: BTreeMap<u32, GLCycleIndex> = BTreeMap::new();
    let mut out = GLCycleIndex::one();
    for &k in lambda.parts() {
        let block = cache
            .entry(k)
            .or_insert_with(|| zindex_gl(field, k as usize));
        out = out.product(block);
    }
    out
}

/// `|GL_λ(F_q)| = ∏ |GL_{λ_i}(F_q)|`.
pub fn gl_young_order(lambda: &Partition, q: u64) -> BigInt {
    lambda
        .parts()
        .iter()
        .map(|&k| gl_order(q, k as usize))
        .product()
}

/// Class of the permutation matrix of a `k`-cycle: each irreducible factor
/// of `X^k - 1` carries the one-part partition of its multiplicity.
pub fn cycle_class(field: &FieldSpec, k: usize) -> GLClass {
    GLClass::new(
        factor_x_pow_minus_one(field, k)
            .into_iter()
            .map(|(phi, a)| (phi, Partition::row(a))),
    )
}

/// Class of the permutation matrices of cycle type `lambda`.
pub fn permutation_class(field: &FieldSpec, lambda: &Partition) -> GLClass {
    lambda.parts().iter().fold(GLClass::unit(), |acc, &k| {
        acc.merge(&cycle_class(field, k as usize))
    })
}

/// Cycle index of the permutation matrices `P_n`.
pub fn zindex_perm_matrices(n: usize, field: &FieldSpec) -> GLCycleIndex {
    let mut out = GLCycleIndex::zero(n);
    for lambda in partitions_of(n) {
        out.add(
            permutation_class(field, &lambda),
            BigRatio::new(BigInt::one(), lambda.z()),
        );
    }
    out
}

/// `a_{t,λ}`: the number of elements of `GL_λ(F_q)` in any class of type
/// `t`, read off the class-level cycle index. Fails if two classes of the
/// same type disagree.
pub fn a_t_lambda(t: &ClassType, lambda: &Partition, field: &FieldSpec) -> Result<BigInt> {
    Ok(a_table(lambda, field)?.remove(t).unwrap_or_default())
}

/// `a_{t,λ}` for every type met by `GL_λ(F_q)`.
pub fn a_table(lambda: &Partition, field: &FieldSpec) -> Result<BTreeMap<ClassType, BigInt>> {
    let z = zindex_gl_young(lambda, field);
    let order = BigRatio::from_integer(gl_young_order(lambda, field.q()));
    let mut by_type: BTreeMap<ClassType, BigRatio> = BTreeMap::new();
    for (f, c) in z.iter() {
        let t = class_type(f);
        match by_type.get(&t) {
            Some(prev) if prev != c => {
                return Err(Error::InconsistentType(format!(
                    "{t}: {prev} vs {c} at {f}"
                )));
            }
            Some(_) => {}
            None => {
                by_type.insert(t, c.clone());
            }
        }
    }
    Ok(by_type
        .into_iter()
        .map(|(t, c)| (t, crate::arith::expect_integer(c * &order, "a_{t,λ}")))
        .collect())
}
