//! Invertible matrices over `F_q` by exhaustive enumeration, classified by
//! ranks of `φ(M)^k`.

use std::collections::BTreeMap;

use super::ExplicitGroup;
use crate::error::{Error, Result};
use crate::glnq::{FieldSpec, FqPoly, GLClass};
use crate::partition::Partition;

/// Row-major square matrix.
pub type Matrix = Vec<u32>;

/// Enumeration limit on `q^{n²}`.
pub const MATRIX_GUARD: u64 = 10_000_000;

fn dim(m: &Matrix) -> usize {
    (m.len() as f64).sqrt().round() as usize
}

fn mat_mul(f: &FieldSpec, a: &Matrix, b: &Matrix) -> Matrix {
    let n = dim(a);
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = f.add(out[i * n + j], f.mul(x, b[k * n + j]));
            }
        }
    }
    out
}

fn identity(n: usize) -> Matrix {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn rank(f: &FieldSpec, m: &Matrix) -> usize {
    let n = dim(m);
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..n).find(|&i| a[i * n + c] != 0) else {
            continue;
        };
        for j in 0..n {
            a.swap(r * n + j, piv * n + j);
        }
        let inv = f.inv(a[r * n + c]);
        for i in 0..n {
            if i != r && a[i * n + c] != 0 {
                let factor = f.mul(a[i * n + c], inv);
                for j in 0..n {
                    a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[r * n + j]));
                }
            }
        }
        r += 1;
    }
    r
}

/// `GL_n(F_q)`, refusing when `q^{n²}` exceeds the guard.
pub fn brute_gl(n: usize, field: &FieldSpec) -> Result<ExplicitGroup<Matrix>> {
    let q = field.q();
    let total = (n * n) as u32;
    let size = q.checked_pow(total).filter(|&s| s <= MATRIX_GUARD);
    let Some(size) = size else {
        return Err(Error::SizeGuard(format!(
            "q^(n^2) = {q}^{total} exceeds {MATRIX_GUARD}"
        )));
    };
    let mut elements = Vec::new();
    for mut idx in 0..size {
        let m: Matrix = (0..n * n)
            .map(|_| {
                let c = (idx % q) as u32;
                idx /= q;
                c
            })
            .collect();
        if rank(field, &m) == n {
            elements.push(m);
        }
    }
    let f = field.clone();
    Ok(ExplicitGroup::new(elements, identity(n), move |a, b| {
        mat_mul(&f, a, b)
    }))
}

/// Monic irreducibles of degree `d` other than `X`: everything not a
/// product of two monic polynomials of positive degree.
pub fn brute_irreducibles(field: &FieldSpec, d: usize) -> Vec<FqPoly> {
    let monic = |k: usize| field.monic_polys(k).collect::<Vec<_>>();
    let mut reducible = std::collections::HashSet::new();
    for a in 1..=d / 2 {
        for x in monic(a) {
            for y in monic(d - a) {
                reducible.insert(field.p_mul(&x, &y));
            }
        }
    }
    monic(d)
        .into_iter()
        .filter(|f| f.coeff(0) != 0 && !reducible.contains(f))
        .collect()
}

/// Classifies matrices of one size: for every irreducible `φ` of degree
/// `d`, the nullities of `φ(M)^k` are `d` times the partial sums of the
/// conjugate of the partition attached to `φ`.
pub struct GlClassifier {
    field: FieldSpec,
    n: usize,
    polys: Vec<FqPoly>,
}

impl GlClassifier {
    pub fn new(field: &FieldSpec, n: usize) -> Self {
        Self {
            field: field.clone(),
            n,
            polys: (1..=n).flat_map(|d| brute_irreducibles(field, d)).collect(),
        }
    }

    fn eval(&self, phi: &FqPoly, m: &Matrix) -> Matrix {
        let f = &self.field;
        let n = self.n;
        let mut acc = vec![0; n * n];
        for &c in phi.coeffs().iter().rev() {
            acc = mat_mul(f, &acc, m);
            for i in 0..n {
                acc[i * n + i] = f.add(acc[i * n + i], c);
            }
        }
        acc
    }

    pub fn classify(&self, m: &Matrix) -> GLClass {
        let n = self.n;
        let mut entries = Vec::new();
        for phi in &self.polys {
            let d = phi.degree();
            let base = self.eval(phi, m);
            let mut power = base.clone();
            let mut prev = 0;
            let mut conj = Vec::new();
            loop {
                let nullity = n - rank(&self.field, &power);
                if nullity == prev {
                    break;
                }
                conj.push(((nullity - prev) / d) as u32);
                prev = nullity;
                power = mat_mul(&self.field, &power, &base);
            }
            if !conj.is_empty() {
                entries.push((phi.clone(), Partition::from_parts(conj).conjugate()));
            }
        }
        GLClass::new(entries)
    }
}

/// Class of a single matrix.
pub fn brute_gl_class(field: &FieldSpec, m: &Matrix) -> GLClass {
    GlClassifier::new(field, dim(m)).classify(m)
}

/// The `n!` permutation matrices.
pub fn brute_perm_matrices(n: usize) -> Vec<Matrix> {
    super::brute_symmetric(n)
        .elements()
        .iter()
        .map(|p| {
            let mut m = vec![0; n * n];
            for (j, &i) in p.iter().enumerate() {
                m[i as usize * n + j] = 1;
            }
            m
        })
        .collect()
}

/// Block-diagonal matrices with invertible blocks of sizes `lambda`.
pub fn brute_gl_young(lambda: &Partition, field: &FieldSpec) -> Result<Vec<Matrix>> {
    let n = lambda.size();
    let mut blocks: BTreeMap<u32, Vec<Matrix>> = BTreeMap::new();
    for &k in lambda.parts() {
        if let std::collections::btree_map::Entry::Vacant(e) = blocks.entry(k) {
            e.insert(brute_gl(k as usize, field)?.elements().to_vec());
        }
    }
    let mut out = vec![vec![0u32; n * n]];
    let mut offset = 0;
    for &k in lambda.parts() {
        let k = k as usize;
        let mut next = Vec::new();
        for m in &out {
            for b in &blocks[&(k as u32)] {
                let mut m = m.clone();
                for i in 0..k {
                    for j in 0..k {
                        m[(offset + i) * n + offset + j] = b[i * k + j];
                    }
                }
                next.push(m);
            }
        }
        out = next;
        offset += k;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let f2 = FieldSpec::new(2).unwrap();
        let f3 = FieldSpec::new(3).unwrap();
        assert_eq!(brute_gl(1, &f2).unwrap().order(), 1);
        assert_eq!(brute_gl(2, &f2).unwrap().order(), 6);
        assert_eq!(brute_gl(2, &f3).unwrap().order(), 48);
        assert!(matches!(brute_gl(4, &f3), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn sieve() {
        let f2 = FieldSpec::new(2).unwrap();
        assert_eq!(brute_irreducibles(&f2, 1), vec![f2.poly(&[1, 1])]);
        assert_eq!(brute_irreducibles(&f2, 2), vec![f2.poly(&[1, 1, 1])]);
        assert_eq!(brute_irreducibles(&FieldSpec::new(3).unwrap(), 2).len(), 3);
    }

    #[test]
    fn classify_small() {
        let f3 = FieldSpec::new(3).unwrap();
        let id = identity(2);
        assert_eq!(brute_gl_class(&f3, &id), GLClass::identity(&f3, 2));
        // a 2×2 Jordan block at eigenvalue 1
        let j = vec![1, 1, 0, 1];
        assert_eq!(
            brute_gl_class(&f3, &j),
            GLClass::new([(f3.poly(&[-1, 1]), Partition::row(2))])
        );
    }
}
