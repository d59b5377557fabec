//! Double-coset counts in `GL_n(F_q)`: permutation matrices, diagonal
//! matrices and block-diagonal subgroups `GL_λ`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::classes::{
    c_d, class_size_inverse_z, enumerate_types, gl_sq_counts, type_count, ClassType,
};
use super::cycle_index::{gl_young_order, zindex_perm_matrices, GLCycleIndex};
use super::field::FieldSpec;
use crate::arith::{expect_integer, factorial, prime_power, BigRatio};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::qpoly::{lagrange_interpolate, QPoly};

/// `Σ_f z_f Z_H[f] Z_K[f]`.
pub fn count_double_cosets_gl(zh: &GLCycleIndex, zk: &GLCycleIndex, q: u64) -> Result<BigInt> {
    if zh.degree() != zk.degree() {
        return Err(Error::DegreeMismatch(zh.degree(), zk.degree()));
    }
    let common: Vec<_> = zh
        .iter()
        .filter_map(|(f, a)| zk.get(f).map(|b| (f, a, b)))
        .collect();
    let total = common
        .par_iter()
        .map(|(f, a, b)| BigRatio::from_integer(class_size_inverse_z(q, f)) * *a * *b)
        .reduce(BigRatio::zero, |x, y| x + y);
    Ok(expect_integer(total, "GL double coset count"))
}

/// `Σ_f Z_H[f] Sq(C_f)`.
pub fn count_self_inverse_gl(zh: &GLCycleIndex, field: &FieldSpec) -> BigInt {
    let sq = gl_sq_counts(field, zh.degree());
    let total = zh.iter().fold(BigRatio::zero(), |acc, (f, a)| {
        acc + a * BigRatio::from_integer(sq.get(f).cloned().unwrap_or_default())
    });
    expect_integer(total, "GL self-inverse count")
}

/// `|P_n \ GL_n(F_q) / P_n|`.
pub fn count_pn_double_cosets(n: usize, field: &FieldSpec) -> BigInt {
    let z = zindex_perm_matrices(n, field);
    count_double_cosets_gl(&z, &z, field.q()).expect("same degree")
}

/// Self-inverse double cosets in `P_n \ GL_n(F_q) / P_n`.
pub fn count_pn_self_inverse(n: usize, field: &FieldSpec) -> BigInt {
    count_self_inverse_gl(&zindex_perm_matrices(n, field), field)
}

/// Closed form for `|Δ_n \ GL_n(F_q) / Δ_n|`, `Δ_n` the diagonal matrices.
pub fn count_diagonal_double_cosets(n: usize, q: u64) -> Result<BigInt> {
    if q < 2 {
        return Err(Error::UnsupportedField(q));
    }
    let qb = BigInt::from(q);
    let mut total = BigRatio::zero();
    for lambda in partitions_of(n) {
        // distinct eigenvalues for the ℓ(λ) blocks
        let mut term = BigRatio::from_integer((1..=lambda.len()).map(|i| &qb - i).product());
        for (k, m) in lambda.runs() {
            let k = k as usize;
            let qk = num_traits::pow(qb.clone(), k);
            let gl: BigInt = (0..k)
                .map(|j| &qk - num_traits::pow(qb.clone(), j))
                .product();
            term *= BigRatio::new(
                num_traits::pow(gl, m),
                num_traits::pow(factorial(k), 2 * m) * factorial(m),
            );
        }
        total += term;
    }
    let nf = factorial(n);
    total *= BigRatio::new(&nf * &nf, num_traits::pow(&qb - 1, 2 * n));
    Ok(expect_integer(total, "diagonal double coset count"))
}

/// `Z_{GL_λ}[f]` for any class `f` of type `t`, computed from the type
/// alone: sum over the ways of splitting each `(degree, partition)` entry
/// of `t` among the blocks of `λ`, each split weighted by `∏ 1/c_d(piece)`.
/// No field arithmetic is involved, so any prime power `q` works.
pub fn young_type_coefficient(t: &ClassType, lambda: &Partition, q: u64) -> BigRatio {
    let entries: Vec<(usize, Vec<(u32, usize)>)> =
        t.entries().map(|(d, p)| (d, p.runs())).collect();
    let blocks: Vec<usize> = lambda.parts().iter().map(|&b| b as usize).collect();
    let mut memo: HashMap<(usize, Vec<usize>), BigRatio> = HashMap::new();
    let mut c_cache: HashMap<(usize, Partition), BigInt> = HashMap::new();
    type_coef_rec(&entries, 0, blocks, q, &mut memo, &mut c_cache)
}

fn type_coef_rec(
    entries: &[(usize, Vec<(u32, usize)>)],
    idx: usize,
    left: Vec<usize>,
    q: u64,
    memo: &mut HashMap<(usize, Vec<usize>), BigRatio>,
    c_cache: &mut HashMap<(usize, Partition), BigInt>,
) -> BigRatio {
    if idx == entries.len() {
        return if left.iter().all(|&r| r == 0) {
            BigRatio::one()
        } else {
            BigRatio::zero()
        };
    }
    let key = (idx, left.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (d, runs) = &entries[idx];
    let k = left.len();
    let mut total = BigRatio::zero();
    // pieces[b] lists, per run, how many parts of that value go to block b
    let mut splits: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &(_, m) in runs {
        let comps = compositions(m, k);
        splits = splits
            .into_iter()
            .flat_map(|s| {
                comps.iter().map(move |c| {
                    let mut s = s.clone();
                    s.push(c.clone());
                    s
                })
            })
            .collect();
    }
    for split in splits {
        let mut rest = left.clone();
        let mut weight = BigRatio::one();
        let mut ok = true;
        for b in 0..k {
            let mut parts = Vec::new();
            for (r, &(v, _)) in runs.iter().enumerate() {
                parts.extend(std::iter::repeat_n(v, split[r][b]));
            }
            let piece = Partition::from_parts(parts);
            let need = d * piece.size();
            if need > rest[b] {
                ok = false;
                break;
            }
            rest[b] -= need;
            if !piece.is_empty() {
                let c = c_cache
                    .entry((*d, piece.clone()))
                    .or_insert_with(|| c_d(q, *d, &piece))
                    .clone();
                weight /= BigRatio::from_integer(c);
            }
        }
        if ok {
            total += weight * type_coef_rec(entries, idx + 1, rest, q, memo, c_cache);
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Ordered ways of writing `m` as a sum of `k` nonnegative integers.
fn compositions(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if m == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if k == 1 {
        return vec![vec![m]];
    }
    (0..=m)
        .flat_map(|first| {
            compositions(m - first, k - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// `a_{t,λ}` through the type-level route.
pub fn a_t_lambda_by_type(t: &ClassType, lambda: &Partition, q: u64) -> BigInt {
    expect_integer(
        young_type_coefficient(t, lambda, q) * BigRatio::from_integer(gl_young_order(lambda, q)),
        "a_{t,λ}",
    )
}

/// `|GL_λ(F_q) \ GL_n(F_q) / GL_μ(F_q)| = Σ_t N_t Z_λ[t] Z_μ[t] z_t`.
pub fn count_gl_young_double_cosets(lambda: &Partition, mu: &Partition, q: u64) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    if prime_power(q).is_none() {
        return Err(Error::UnsupportedField(q));
    }
    let types = enumerate_types(lambda.size());
    let total = types
        .par_iter()
        .map(|t| {
            let n_t = type_count(t, q);
            if n_t.is_zero() {
                return BigRatio::zero();
            }
            let a = young_type_coefficient(t, lambda, q);
            if a.is_zero() {
                return BigRatio::zero();
            }
            let b = if lambda == mu {
                a.clone()
            } else {
                young_type_coefficient(t, mu, q)
            };
            BigRatio::from_integer(n_t * t.z(q)) * a * b
        })
        .reduce(BigRatio::zero, |x, y| x + y);
    Ok(expect_integer(total, "GL_λ double coset count"))
}

/// Interpolated polynomial for `q ↦ |GL_λ \ GL_n / GL_μ|` with checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub polynomial: QPoly,
    pub nodes: Vec<(u64, BigInt)>,
    pub held_out: Vec<(u64, BigInt)>,
    pub monic: bool,
    pub positive_coefficients: bool,
}

/// Interpolates through `nodes` and checks every `held_out` field order.
pub fn conjecture_poly(
    lambda: &Partition,
    mu: &Partition,
    nodes: &[u64],
    held_out: &[u64],
) -> Result<ConjectureReport> {
    if nodes.len() < 2 {
        return Err(Error::InvalidInput(
            "at least two interpolation nodes are needed".into(),
        ));
    }
    if held_out.is_empty() {
        return Err(Error::InvalidInput(
            "at least one held-out field order is needed".into(),
        ));
    }
    let mut all: Vec<u64> = nodes.iter().chain(held_out).copied().collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(
            "field orders must be pairwise distinct".into(),
        ));
    }
    let eval = |qs: &[u64]| -> Result<Vec<(u64, BigInt)>> {
        qs.par_iter()
            .map(|&q| Ok((q, count_gl_young_double_cosets(lambda, mu, q)?)))
            .collect()
    };
    let node_values = eval(nodes)?;
    let held_values = eval(held_out)?;
    let points: Vec<(BigInt, BigInt)> = node_values
        .iter()
        .map(|(q, v)| (BigInt::from(*q), v.clone()))
        .collect();
    let polynomial = lagrange_interpolate(&points)?;
    for (q, v) in &held_values {
        let predicted = polynomial.eval(&BigInt::from(*q));
        if &predicted != v {
            return Err(Error::ValidationFailed(format!(
                "interpolant predicts {predicted} at q = {q} but the count is {v}; supply more nodes"
            )));
        }
    }
    Ok(ConjectureReport {
        monic: polynomial.is_monic(),
        positive_coefficients: polynomial.has_positive_coefficients(),
        polynomial,
        nodes: node_values,
        held_out: held_values,
    })
}

/// The first `count` prime powers that are at least 2.
pub fn prime_powers(count: usize) -> Vec<u64> {
    (2u64..)
        .filter(|&q| prime_power(q).is_some())
        .take(count)
        .collect()
}

/// Distinct class types met by `GL_λ`, with `a_{t,λ}`, via the type route.
pub fn a_table_by_type(lambda: &Partition, q: u64) -> BTreeMap<ClassType, BigInt> {
    enumerate_types(lambda.size())
        .into_iter()
        .filter(|t| !type_count(t, q).is_zero())
        .map(|t| {
            let a = a_t_lambda_by_type(&t, lambda, q);
            (t, a)
        })
        .filter(|(_, a)| !a.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glnq::cycle_index::{a_table, zindex_gl_young};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_matrix_table() {
        let f2 = FieldSpec::new(2).unwrap();
        let expect = [1u64, 2, 7, 51, 885, 44206];
        for (n, &v) in expect.iter().enumerate() {
            assert_eq!(count_pn_double_cosets(n + 1, &f2), BigInt::from(v));
        }
        let expect_si = [1u64, 2, 5, 19, 87, 706];
        for (n, &v) in expect_si.iter().enumerate() {
            assert_eq!(count_pn_self_inverse(n + 1, &f2), BigInt::from(v));
        }
    }

    #[test]
    fn diagonal_closed_form() {
        assert_eq!(count_diagonal_double_cosets(1, 7).unwrap(), BigInt::one());
        assert_eq!(count_diagonal_double_cosets(2, 2).unwrap(), BigInt::from(6));
        for q in [2, 3, 4, 5] {
            for n in 1..=4 {
                let ones = Partition::column(n);
                assert_eq!(
                    count_diagonal_double_cosets(n, q).unwrap(),
                    count_gl_young_double_cosets(&ones, &ones, q).unwrap(),
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn type_route_matches_class_route() {
        for q in [2, 3, 4] {
            let field = FieldSpec::new(q).unwrap();
            for n in 1..=4 {
                for lambda in partitions_of(n) {
                    assert_eq!(
                        a_table(&lambda, &field).unwrap(),
                        a_table_by_type(&lambda, q),
                        "q={q} {lambda}"
                    );
                }
                let parts = partitions_of(n);
                for l in &parts {
                    for m in &parts {
                        let zl = zindex_gl_young(l, &field);
                        let zm = zindex_gl_young(m, &field);
                        assert_eq!(
                            count_double_cosets_gl(&zl, &zm, q).unwrap(),
                            count_gl_young_double_cosets(l, m, q).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn young_counts() {
        for n in 1..=5 {
            assert_eq!(
                count_gl_young_double_cosets(&Partition::row(n), &Partition::row(n), 5).unwrap(),
                BigInt::one()
            );
        }
        assert_eq!(
            count_gl_young_double_cosets(&p("3,2,1"), &p("4,2"), 2).unwrap(),
            BigInt::from(495)
        );
        assert_eq!(
            count_gl_young_double_cosets(&p("1,1"), &p("1,1"), 2).unwrap(),
            BigInt::from(6)
        );
        assert!(matches!(
            count_gl_young_double_cosets(&p("2"), &p("1"), 2),
            Err(Error::SizeMismatch(2, 1))
        ));
        assert!(matches!(
            count_gl_young_double_cosets(&p("2"), &p("2"), 6),
            Err(Error::UnsupportedField(6))
        ));
    }

    #[test]
    fn conjecture_example() {
        let r = conjecture_poly(&p("3,2,1"), &p("4,2"), &[2, 3, 4, 5, 7], &[8]).unwrap();
        assert_eq!(r.polynomial, QPoly::from_i64(&[117, 89, 32, 7, 1]));
        assert!(r.monic && r.positive_coefficients);
        let r = conjecture_poly(&p("3"), &p("3"), &[2, 3], &[4]).unwrap();
        assert_eq!(r.polynomial, QPoly::from_i64(&[1]));
        assert!(matches!(
            conjecture_poly(&p("2,1"), &p("1,1,1"), &[2, 3], &[4]),
            Err(Error::ValidationFailed(_))
        ));
        assert!(conjecture_poly(&p("2"), &p("2"), &[2], &[3]).is_err());
        assert!(conjecture_poly(&p("2"), &p("2"), &[2, 3], &[3]).is_err());
    }

    #[test]
    fn diagonal_degree() {
        for n in 2..=4usize {
            let ones = Partition::column(n);
            let qs = prime_powers((n - 1) * (n - 1) + 2);
            let (nodes, held) = qs.split_at(qs.len() - 1);
            let r = conjecture_poly(&ones, &ones, nodes, held).unwrap();
            assert_eq!(r.polynomial.degree(), Some((n - 1) * (n - 1)));
            assert!(r.monic && r.positive_coefficients);
        }
    }
}
