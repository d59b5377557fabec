//! Closed forms for the symmetric group `S_n`: square-root counts, cycle
//! indices of cyclic, dihedral, Young and hyperoctahedral subgroups, and the
//! two counting formulas in cycle-index coordinates.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{euler_phi, expect_integer, factorial, ratio, BigRatio};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::series::PartitionVector;
use crate::typeb;

/// Number of `x ∈ S_n` with `x²` equal to a fixed permutation of cycle type
/// `λ`.
pub fn sq_count(lambda: &Partition) -> BigInt {
    let mut total = BigInt::one();
    for (k, m) in lambda.runs() {
        let kb = BigInt::from(k);
        if k % 2 == 0 {
            // Cycles of even length pair up into cycles of length 2k.
            if m % 2 == 1 {
                return BigInt::zero();
            }
            let half = m / 2;
            total *= factorial(m) * num_traits::pow(BigInt::from(k / 2), half) / factorial(half);
        } else {
            // Odd cycles either pair up (k interleavings per pair) or have a
            // unique square root of the same length.
            let mut sum = BigInt::zero();
            for i in 0..=m / 2 {
                let pairings = factorial(m)
                    / (factorial(i) * factorial(m - 2 * i) * num_traits::pow(BigInt::from(2), i));
                sum += pairings * num_traits::pow(kb.clone(), i);
            }
            total *= sum;
        }
    }
    total
}

/// Sign of a permutation of cycle type `λ`.
pub fn signature(lambda: &Partition) -> i32 {
    lambda.signature()
}

/// Cycle index of `S_n` itself: `Σ_{ν ⊢ n} x_ν / z_ν`.
pub fn zindex_symmetric(n: usize) -> PartitionVector {
    PartitionVector::from_entries(
        n,
        partitions_of(n).into_iter().map(|nu| {
            let z = nu.z();
            (nu, BigRatio::new(BigInt::one(), z))
        }),
    )
}

fn rotation_part(n: usize, weight: &BigRatio) -> PartitionVector {
    let mut v = PartitionVector::zero(n);
    for d in crate::arith::divisors(n as u64) {
        let key = Partition::rectangle(d as u32, n / d as usize);
        v.add(key, weight * BigRatio::from_integer(euler_phi(d).into()));
    }
    v
}

/// Cycle index of the cyclic group `Z_n` acting on `n` points.
pub fn zindex_cyclic(n: usize) -> Result<PartitionVector> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group needs n >= 1".into()));
    }
    Ok(rotation_part(n, &ratio(1, n as i64)))
}

/// Cycle index of the dihedral group `D_n` (order `2n`) acting on the
/// vertices of an `n`-gon, `n >= 3`.
pub fn zindex_dihedral(n: usize) -> Result<PartitionVector> {
    if n < 3 {
        return Err(Error::InvalidInput("dihedral group needs n >= 3".into()));
    }
    let mut v = rotation_part(n, &ratio(1, 2 * n as i64));
    if n % 2 == 1 {
        let key = Partition::from_parts(
            std::iter::once(1)
                .chain(std::iter::repeat_n(2, (n - 1) / 2))
                .collect(),
        );
        v.add(key, ratio(1, 2));
    } else {
        let through_vertices = Partition::from_parts(
            [1, 1]
                .into_iter()
                .chain(std::iter::repeat_n(2, n / 2 - 1))
                .collect(),
        );
        v.add(through_vertices, ratio(1, 4));
        v.add(Partition::rectangle(2, n / 2), ratio(1, 4));
    }
    Ok(v)
}

/// Cycle index of the Young subgroup `S_λ = S_{λ₁} × S_{λ₂} × …`.
pub fn zindex_young(lambda: &Partition) -> PartitionVector {
    lambda
        .parts()
        .iter()
        .fold(PartitionVector::one(), |acc, &part| {
            acc.product(&zindex_symmetric(part as usize))
        })
}

/// Cycle index of the hyperoctahedral group (order `2^n n!`) acting on the
/// `2n` vertices of the cross-polytope. A positive `k`-cycle of a signed
/// permutation moves the vertices in two `k`-cycles, a negative one in a
/// single `2k`-cycle.
pub fn zindex_hyperoctahedral(n: usize) -> PartitionVector {
    let full = typeb::full_cycle_index(n);
    let mut v = PartitionVector::zero(2 * n);
    for (class, coeff) in full.iter() {
        let key = class.pos().merge(class.pos()).merge(&class.neg().scale(2));
        v.add(key, coeff.clone());
    }
    v
}

/// `|H\S_n/K|` from the cycle indices of `H` and `K`:
/// `Σ_ν z_ν · Z_H[ν] · Z_K[ν]`.
pub fn count_double_cosets(zh: &PartitionVector, zk: &PartitionVector) -> Result<BigInt> {
    if zh.degree() != zk.degree() {
        return Err(Error::DegreeMismatch(zh.degree(), zk.degree()));
    }
    let common: Vec<_> = zh
        .iter()
        .filter_map(|(nu, a)| zk.get(nu).map(|b| (nu, a, b)))
        .collect();
    let terms: Vec<BigRatio> = common
        .par_iter()
        .map(|(nu, a, b)| BigRatio::from_integer(nu.z()) * *a * *b)
        .collect();
    let total = terms.into_iter().fold(BigRatio::zero(), |acc, t| acc + t);
    Ok(expect_integer(total, "double coset count"))
}

/// Number of self-inverse double cosets in `H\S_n/H`:
/// `Σ_ν Z_H[ν] · Sq(C_ν)`.
pub fn count_self_inverse(zh: &PartitionVector) -> BigInt {
    let entries: Vec<_> = zh.iter().collect();
    let terms: Vec<BigRatio> = entries
        .par_iter()
        .map(|(nu, a)| BigRatio::from_integer(sq_count(nu)) * *a)
        .collect();
    let total = terms.into_iter().fold(BigRatio::zero(), |acc, t| acc + t);
    expect_integer(total, "self-inverse count")
}

/// Sum of all entries of the character table of `S_n`, as `Σ_λ Sq(C_λ)`.
pub fn character_table_sum(n: usize) -> BigInt {
    partitions_of(n).iter().map(sq_count).sum()
}

/// Coefficients `0..=order` of the product generating function for the
/// character table sums, expanded as a truncated power series.
pub fn character_table_sum_series(order: usize) -> Vec<BigInt> {
    let mut series = vec![BigRatio::zero(); order + 1];
    series[0] = BigRatio::one();
    let mul = |series: &[BigRatio], factor: &[BigRatio]| -> Vec<BigRatio> {
        let mut out = vec![BigRatio::zero(); order + 1];
        for (i, a) in series.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in factor.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        out
    };
    // Pairs of cycles of even length 2k: Σ_m x^{4km} (2m)! k^m / m!.
    // The k = 0 factor is 1.
    for k in 1..=order / 4 {
        let mut factor = vec![BigRatio::zero(); order + 1];
        let mut m = 0;
        while 4 * k * m <= order {
            let c = factorial(2 * m) * num_traits::pow(BigInt::from(k), m) / factorial(m);
            factor[4 * k * m] = BigRatio::from_integer(c);
            m += 1;
        }
        series = mul(&series, &factor);
    }
    // Cycles of odd length 2k+1.
    for k in 0.. {
        let len = 2 * k + 1;
        if len > order {
            break;
        }
        let half = ratio(2 * k as i64 + 1, 2);
        let mut factor = vec![BigRatio::zero(); order + 1];
        let mut m = 0;
        while len * m <= order {
            let mut inner = BigRatio::zero();
            for i in 0..=m / 2 {
                let c = factorial(m) / (factorial(i) * factorial(m - 2 * i));
                inner += BigRatio::from_integer(c) * num_traits::pow(half.clone(), i);
            }
            factor[len * m] = inner;
            m += 1;
        }
        series = mul(&series, &factor);
    }
    series
        .into_iter()
        .map(|c| expect_integer(c, "character table series"))
        .collect()
}
