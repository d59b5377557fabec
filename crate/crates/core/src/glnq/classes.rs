//! Conjugacy classes of `GL_n(F_q)` as maps from irreducible polynomials
//! (other than `X`) to partitions, their centralizer orders, types and
//! squares.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::factor::{factor, irreducibles};
use super::field::{FieldSpec, FqPoly};
use crate::arith::{binomial_big, expect_integer, factorial, irreducible_count, BigRatio};
use crate::partition::{partitions_of, Partition};
use crate::series::ClassKey;

/// A conjugacy class of `GL_n(F_q)`; `n = Σ deg(φ)·|f(φ)|`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GLClass {
    assignment: BTreeMap<FqPoly, Partition>,
}

impl GLClass {
    /// Drops empty partitions; rejects `X` as a key.
    pub fn new(entries: impl IntoIterator<Item = (FqPoly, Partition)>) -> Self {
        let mut assignment = BTreeMap::new();
        for (phi, lambda) in entries {
            assert!(
                phi != FqPoly::x(),
                "X is not an elementary divisor of an invertible matrix"
            );
            if !lambda.is_empty() {
                assignment.insert(phi, lambda);
            }
        }
        Self { assignment }
    }

    pub fn assignment(&self) -> &BTreeMap<FqPoly, Partition> {
        &self.assignment
    }

    pub fn get(&self, phi: &FqPoly) -> Option<&Partition> {
        self.assignment.get(phi)
    }

    pub fn n(&self) -> usize {
        self.assignment
            .iter()
            .map(|(phi, l)| phi.degree() * l.size())
            .sum()
    }

    /// The class of the identity matrix of size `n`.
    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        Self::new([(field.poly(&[-1, 1]), Partition::column(n))])
    }
}

impl fmt::Display for GLClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (phi, l)) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{phi} -> {l}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for GLClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ClassKey for GLClass {
    fn size(&self) -> usize {
        self.n()
    }

    /// Block-diagonal sum: partitions at a shared polynomial are concatenated.
    fn merge(&self, other: &Self) -> Self {
        let mut assignment = self.assignment.clone();
        for (phi, l) in &other.assignment {
            assignment
                .entry(phi.clone())
                .and_modify(|e| *e = e.merge(l))
                .or_insert_with(|| l.clone());
        }
        Self { assignment }
    }

    fn unit() -> Self {
        Self::default()
    }
}

/// `|GL_n(F_q)| = ∏_{j<n} (q^n - q^j)`.
pub fn gl_order(q: u64, n: usize) -> BigInt {
    let q = BigInt::from(q);
    let qn = num_traits::pow(q.clone(), n);
    (0..n)
        .map(|j| &qn - num_traits::pow(q.clone(), j))
        .product()
}

/// Centralizer order contributed by a polynomial of degree `d` carrying
/// `lambda`: `∏_k ∏_{i=1}^{m_k} (Q^{d_k} - Q^{d_k - i})` with `Q = q^d` and
/// `d_k = Σ_{j≤k} j m_j + k Σ_{j>k} m_j`.
pub fn c_d(q: u64, d: usize, lambda: &Partition) -> BigInt {
    let big_q = num_traits::pow(BigInt::from(q), d);
    let runs = lambda.multiplicities();
    let mut out = BigInt::one();
    for (&k, &m) in &runs {
        let below: usize = runs.range(..=k).map(|(&j, &mj)| j as usize * mj).sum();
        let above: usize = runs.range(k + 1..).map(|(_, &mj)| mj).sum();
        let dk = below + k as usize * above;
        let top = num_traits::pow(big_q.clone(), dk);
        for i in 1..=m {
            out *= &top - num_traits::pow(big_q.clone(), dk - i);
        }
    }
    out
}

/// `z_f = |GL_n(F_q)| / |C_f|`.
pub fn class_size_inverse_z(q: u64, f: &GLClass) -> BigInt {
    f.assignment
        .iter()
        .map(|(phi, l)| c_d(q, phi.degree(), l))
        .product()
}

/// Every conjugacy class of `GL_n(F_q)`, sorted.
pub fn enumerate_classes(field: &FieldSpec, n: usize) -> Vec<GLClass> {
    let polys: Vec<FqPoly> = (1..=n).flat_map(|d| irreducibles(field, d)).collect();
    let parts: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    fn go(
        polys: &[FqPoly],
        parts: &[Vec<Partition>],
        start: usize,
        left: usize,
        cur: &mut Vec<(FqPoly, Partition)>,
        out: &mut Vec<GLClass>,
    ) {
        if left == 0 {
            out.push(GLClass::new(cur.iter().cloned()));
            return;
        }
        for (j, phi) in polys.iter().enumerate().skip(start) {
            let d = phi.degree();
            if d > left {
                break;
            }
            for s in 1..=left / d {
                for l in &parts[s] {
                    cur.push((phi.clone(), l.clone()));
                    go(polys, parts, j + 1, left - d * s, cur, out);
                    cur.pop();
                }
            }
        }
    }
    go(&polys, &parts, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `φ₂`, the monic polynomial whose roots are the squares of the roots of
/// `φ`: with `φ(Y) = A(Y²) + Y·B(Y²)` it is `±(A(X)² - X·B(X)²)`.
pub fn phi_squared(field: &FieldSpec, phi: &FqPoly) -> FqPoly {
    let even = FqPoly::new(phi.coeffs().iter().copied().step_by(2).collect());
    let odd = FqPoly::new(phi.coeffs().iter().copied().skip(1).step_by(2).collect());
    let a2 = field.p_mul(&even, &even);
    let xb2 = field.p_mul(&FqPoly::x(), &field.p_mul(&odd, &odd));
    field.p_monic(&field.p_sub(&a2, &xb2))
}

/// The class of the squares of the elements of `f`.
pub fn class_square(field: &FieldSpec, f: &GLClass) -> GLClass {
    let even = field.q().is_multiple_of(2);
    let mut out = GLClass::default();
    for (phi, lambda) in &f.assignment {
        let image = if even {
            Partition::from_parts(
                lambda
                    .parts()
                    .iter()
                    .flat_map(|&k| [k.div_ceil(2), k / 2])
                    .collect(),
            )
        } else {
            lambda.clone()
        };
        for (psi, e) in factor(field, &phi_squared(field, phi)) {
            let mut contribution = GLClass::default();
            contribution.assignment.insert(
                psi,
                (0..e).fold(Partition::empty(), |acc, _| acc.merge(&image)),
            );
            out = out.merge(&contribution);
        }
    }
    out
}

/// `Sq(C_f)` for every class of `GL_n(F_q)`: the number of square roots of
/// any element of `C_f`.
pub fn gl_sq_counts(field: &FieldSpec, n: usize) -> BTreeMap<GLClass, BigInt> {
    let classes = enumerate_classes(field, n);
    let squares: Vec<(GLClass, BigInt)> = classes
        .par_iter()
        .map(|g| (class_square(field, g), class_size_inverse_z(field.q(), g)))
        .collect();
    let mut acc: BTreeMap<GLClass, BigRatio> = classes
        .iter()
        .map(|c| (c.clone(), BigRatio::zero()))
        .collect();
    for (s, zg) in squares {
        let zf = class_size_inverse_z(field.q(), &s);
        *acc.get_mut(&s).expect("the square of a class is a class") += BigRatio::new(zf, zg);
    }
    acc.into_iter()
        .map(|(c, v)| (c, expect_integer(v, "square-root count")))
        .collect()
}

/// `Sq(C_f)` for one class, by scanning all classes of the same size.
pub fn gl_sq_count(field: &FieldSpec, f: &GLClass, all_classes: &[GLClass]) -> BigInt {
    let q = field.q();
    let zf = class_size_inverse_z(q, f);
    let total = all_classes
        .iter()
        .filter(|g| &class_square(field, g) == f)
        .fold(BigRatio::zero(), |acc, g| {
            acc + BigRatio::new(zf.clone(), class_size_inverse_z(q, g))
        });
    expect_integer(total, "square-root count")
}

/// Per degree, the multiset (sorted list) of partitions assigned to
/// polynomials of that degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ClassType {
    parts: BTreeMap<usize, Vec<Partition>>,
}

impl ClassType {
    pub fn new(entries: impl IntoIterator<Item = (usize, Partition)>) -> Self {
        let mut parts: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
        for (d, l) in entries {
            if !l.is_empty() {
                parts.entry(d).or_default().push(l);
            }
        }
        for v in parts.values_mut() {
            v.sort();
        }
        Self { parts }
    }

    pub fn parts(&self) -> &BTreeMap<usize, Vec<Partition>> {
        &self.parts
    }

    /// `(degree, partition)` with repetition.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.parts
            .iter()
            .flat_map(|(&d, ls)| ls.iter().map(move |l| (d, l)))
    }

    pub fn n(&self) -> usize {
        self.entries().map(|(d, l)| d * l.size()).sum()
    }

    /// `z_f` for any class of this type.
    pub fn z(&self, q: u64) -> BigInt {
        self.entries().map(|(d, l)| c_d(q, d, l)).product()
    }
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (d, ls)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{d}:")?;
            for l in ls {
                write!(f, " {l}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn class_type(f: &GLClass) -> ClassType {
    ClassType::new(
        f.assignment
            .iter()
            .map(|(phi, l)| (phi.degree(), l.clone())),
    )
}

/// Number of classes of type `t`:
/// `∏_d binom(I_d, |t_d|) · |t_d|! / ∏_λ m_{d,λ}!`.
pub fn type_count(t: &ClassType, q: u64) -> BigInt {
    let mut out = BigInt::one();
    for (&d, ls) in &t.parts {
        let avail = irreducible_count(q, d as u64);
        out *= binomial_big(&avail, ls.len()) * factorial(ls.len());
        let mut mult: BTreeMap<&Partition, usize> = BTreeMap::new();
        for l in ls {
            *mult.entry(l).or_default() += 1;
        }
        for m in mult.values() {
            out /= factorial(*m);
        }
    }
    out
}

/// All types of total size `n`, whether or not classes of that type exist
/// over a given field.
pub fn enumerate_types(n: usize) -> Vec<ClassType> {
    let parts: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    // every (degree, partition) slot, ordered; a type is a multiset of slots
    let slots: Vec<(usize, Partition)> = (1..=n)
        .flat_map(|d| {
            (1..=n / d)
                .flat_map(|s| parts[s].iter().map(move |l| (d, l.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut out = Vec::new();
    fn go(
        slots: &[(usize, Partition)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, Partition)>,
        out: &mut Vec<ClassType>,
    ) {
        if left == 0 {
            out.push(ClassType::new(cur.iter().cloned()));
            return;
        }
        for (j, (d, l)) in slots.iter().enumerate().skip(start) {
            let w = d * l.size();
            if w <= left {
                cur.push((*d, l.clone()));
                go(slots, j, left - w, cur, out);
                cur.pop();
            }
        }
    }
    go(&slots, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn centralizers() {
        let f2 = FieldSpec::new(2).unwrap();
        assert_eq!(
            class_size_inverse_z(2, &GLClass::identity(&f2, 1)),
            BigInt::one()
        );
        assert_eq!(
            class_size_inverse_z(2, &GLClass::identity(&f2, 2)),
            BigInt::from(6)
        );
        for n in 1..=5 {
            assert_eq!(c_d(3, 1, &Partition::column(n)), gl_order(3, n));
        }
        assert_eq!(gl_order(3, 2), BigInt::from(48));
    }

    #[test]
    fn class_equation() {
        for q in [2, 3, 4, 5] {
            let field = FieldSpec::new(q).unwrap();
            for n in 1..=4 {
                if q == 5 && n == 4 {
                    continue;
                }
                let order = gl_order(q, n);
                let total: BigInt = enumerate_classes(&field, n)
                    .iter()
                    .map(|f| &order / class_size_inverse_z(q, f))
                    .sum();
                assert_eq!(total, order, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn class_counts() {
        let f2 = FieldSpec::new(2).unwrap();
        let f3 = FieldSpec::new(3).unwrap();
        assert_eq!(enumerate_classes(&f2, 1).len(), 1);
        assert_eq!(enumerate_classes(&f2, 2).len(), 3);
        assert_eq!(enumerate_classes(&f3, 2).len(), 8);
    }

    #[test]
    fn squares_of_phi() {
        let f2 = FieldSpec::new(2).unwrap();
        let f3 = FieldSpec::new(3).unwrap();
        assert_eq!(phi_squared(&f3, &f3.poly(&[-1, 1])), f3.poly(&[-1, 1]));
        assert_eq!(phi_squared(&f2, &f2.poly(&[1, 1, 1])), f2.poly(&[1, 1, 1]));
        assert_eq!(phi_squared(&f3, &f3.poly(&[1, 0, 1])), f3.poly(&[1, 2, 1]));
    }

    #[test]
    fn class_squares() {
        let f2 = FieldSpec::new(2).unwrap();
        let f = GLClass::new([(f2.poly(&[1, 1, 1]), p("5,2"))]);
        assert_eq!(
            class_square(&f2, &f),
            GLClass::new([(f2.poly(&[1, 1, 1]), p("3,2,1,1"))])
        );
        let f3 = FieldSpec::new(3).unwrap();
        let g = GLClass::new([(f3.poly(&[1, 0, 1]), p("2,1"))]);
        assert_eq!(
            class_square(&f3, &g),
            GLClass::new([(f3.poly(&[1, 1]), p("2,2,1,1"))])
        );
        let g = GLClass::new([(f3.poly(&[1, 0, 1]), p("2,1")), (f3.poly(&[1, 1]), p("1"))]);
        assert_eq!(
            class_square(&f3, &g),
            GLClass::new([(f3.poly(&[1, 1]), p("2,2,1,1")), (f3.poly(&[2, 1]), p("1"))])
        );
        let id = GLClass::identity(&f3, 4);
        assert_eq!(class_square(&f3, &id), id);
    }

    #[test]
    fn sq_counts() {
        let f3 = FieldSpec::new(3).unwrap();
        let sq = gl_sq_counts(&f3, 1);
        assert_eq!(sq[&GLClass::identity(&f3, 1)], BigInt::from(2));
        assert_eq!(
            sq[&GLClass::new([(f3.poly(&[1, 1]), p("1"))])],
            BigInt::zero()
        );
        let f2 = FieldSpec::new(2).unwrap();
        let classes = enumerate_classes(&f2, 2);
        assert_eq!(
            gl_sq_count(&f2, &GLClass::identity(&f2, 2), &classes),
            BigInt::from(4)
        );
        for q in [2, 3, 4] {
            let field = FieldSpec::new(q).unwrap();
            for n in 1..=3 {
                let sq = gl_sq_counts(&field, n);
                let order = gl_order(q, n);
                // Σ_f |C_f| Sq(C_f) = |G|
                let total: BigInt = sq
                    .iter()
                    .map(|(f, s)| &order / class_size_inverse_z(q, f) * s)
                    .sum();
                assert_eq!(total, order);
            }
        }
    }

    #[test]
    fn types() {
        let t = ClassType::new([(1, Partition::column(3))]);
        assert_eq!(type_count(&t, 3), BigInt::from(2));
        let t = ClassType::new([(1, p("1")), (1, p("1"))]);
        assert_eq!(type_count(&t, 3), BigInt::one());
        for q in [2, 3] {
            let field = FieldSpec::new(q).unwrap();
            for n in 1..=5 {
                let classes = enumerate_classes(&field, n);
                let total: BigInt = enumerate_types(n).iter().map(|t| type_count(t, q)).sum();
                assert_eq!(total, BigInt::from(classes.len()), "q={q} n={n}");
                let mut by_type: BTreeMap<ClassType, usize> = BTreeMap::new();
                for c in &classes {
                    *by_type.entry(class_type(c)).or_default() += 1;
                }
                for (t, count) in by_type {
                    assert_eq!(type_count(&t, q), BigInt::from(count));
                    assert_eq!(
                        t.z(q),
                        class_size_inverse_z(
                            q,
                            classes.iter().find(|c| class_type(c) == t).unwrap()
                        )
                    );
                }
            }
        }
    }
}
