//! Factorization over `F_q`: squarefree decomposition, distinct-degree and
//! equal-degree (Cantor–Zassenhaus) splitting.

use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{FieldSpec, FqPoly};
use crate::arith::divisors;

/// Monic irreducible factors with multiplicities, sorted by factor.
pub fn factor(field: &FieldSpec, f: &FqPoly) -> Vec<(FqPoly, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let f = field.p_monic(f);
    let mut out = Vec::new();
    for (g, mult) in squarefree(field, &f) {
        for (h, d) in distinct_degree(field, &g) {
            for irr in equal_degree(field, &h, d) {
                out.push((irr, mult));
            }
        }
    }
    out.sort();
    out
}

/// `f = ∏ g_i^i` with each `g_i` squarefree and pairwise coprime.
pub fn squarefree(field: &FieldSpec, f: &FqPoly) -> Vec<(FqPoly, usize)> {
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let df = field.p_derivative(f);
    let mut c = field.p_gcd(f, &df);
    let mut w = field.p_div(f, &c);
    let mut i = 1;
    while !w.is_one() {
        let y = field.p_gcd(&w, &c);
        let z = field.p_div(&w, &y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = field.p_div(&c, &w);
    }
    if !c.is_one() {
        let root = pth_root(field, &c);
        let p = field.characteristic() as usize;
        for (g, j) in squarefree(field, &root) {
            out.push((g, j * p));
        }
    }
    out
}

/// The `p`-th root of a polynomial in `X^p`.
fn pth_root(field: &FieldSpec, f: &FqPoly) -> FqPoly {
    let p = field.characteristic() as usize;
    // c ↦ c^(q/p) inverts the Frobenius c ↦ c^p on F_q
    let e = field.q() / p as u64;
    FqPoly::new(
        f.coeffs()
            .iter()
            .step_by(p)
            .map(|&c| field.pow(c, e))
            .collect(),
    )
}

/// Splits a squarefree monic `f` into products of irreducibles of equal
/// degree: pairs `(product, degree)`.
pub fn distinct_degree(field: &FieldSpec, f: &FqPoly) -> Vec<(FqPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = FqPoly::x();
    let mut h = x.clone();
    let mut d = 0;
    while f.degree() >= 2 * (d + 1) {
        d += 1;
        h = field.p_frobenius(&h, 1, &f);
        let g = field.p_gcd(&field.p_sub(&h, &x), &f);
        if !g.is_one() {
            f = field.p_div(&f, &g);
            h = field.p_rem(&h, &f);
            out.push((g, d));
        }
    }
    if f.degree() > 0 {
        let d = f.degree();
        out.push((f, d));
    }
    out
}

fn seed_for(f: &FqPoly) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    f.coeffs().hash(&mut h);
    h.finish()
}

/// Splits a product of distinct irreducibles of degree `d`.
pub fn equal_degree(field: &FieldSpec, f: &FqPoly, d: usize) -> Vec<FqPoly> {
    if f.degree() == d {
        return vec![f.clone()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(f));
    let q = field.q();
    loop {
        let a = FqPoly::new(
            (0..f.degree())
                .map(|_| rng.gen_range(0..q) as u32)
                .collect(),
        );
        if a.degree() == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            let exp = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
            let t = field.p_powmod(&a, &exp, f);
            field.p_sub(&t, &FqPoly::one())
        } else {
            // trace from F_{q^d} down to F_2
            let bits = field.degree() as usize * d;
            let mut t = field.p_rem(&a, f);
            let mut acc = t.clone();
            for _ in 1..bits {
                t = field.p_rem(&field.p_mul(&t, &t), f);
                acc = field.p_add(&acc, &t);
            }
            acc
        };
        let g = field.p_gcd(&b, f);
        if g.degree() > 0 && g.degree() < f.degree() {
            let rest = field.p_div(f, &g);
            let mut out = equal_degree(field, &g, d);
            out.extend(equal_degree(field, &rest, d));
            out.sort();
            return out;
        }
    }
}

/// Rabin's test.
pub fn is_irreducible(field: &FieldSpec, f: &FqPoly) -> bool {
    let n = f.degree();
    if f.is_zero() || n == 0 {
        return false;
    }
    let f = field.p_monic(f);
    let x = FqPoly::x();
    if field
        .p_sub(&field.p_frobenius(&x, n, &f), &field.p_rem(&x, &f))
        .is_zero()
    {
        let primes: Vec<u64> = divisors(n as u64)
            .into_iter()
            .filter(|&r| r > 1 && crate::arith::is_prime(r))
            .collect();
        primes.iter().all(|&r| {
            let h = field.p_frobenius(&x, n / r as usize, &f);
            field.p_gcd(&field.p_sub(&h, &x), &f).is_one()
        })
    } else {
        false
    }
}

/// Monic irreducibles of degree `d` other than `X`, in increasing order.
pub fn irreducibles(field: &FieldSpec, d: usize) -> Vec<FqPoly> {
    assert!(d >= 1, "degree must be positive");
    field
        .monic_polys(d)
        .filter(|f| f.coeff(0) != 0 && is_irreducible(field, f))
        .collect()
}

/// Factors `X^k - 1`. Writing `k = k' p^e` with `p ∤ k'`, this is
/// `(X^{k'} - 1)^{p^e}` and only the squarefree part is split.
pub fn factor_x_pow_minus_one(field: &FieldSpec, k: usize) -> Vec<(FqPoly, usize)> {
    let p = field.characteristic() as usize;
    let (mut kp, mut pe) = (k, 1);
    while kp % p == 0 {
        kp /= p;
        pe *= p;
    }
    let base = field.p_sub(&FqPoly::monomial(kp), &FqPoly::one());
    let mut out = Vec::new();
    for (g, deg) in distinct_degree(field, &base) {
        for irr in equal_degree(field, &g, deg) {
            out.push((irr, pe));
        }
    }
    out.sort();
    out
}
