//! Finite fields `F_q` for small `q`, and polynomials over them.
//!
//! Elements of `F_{p^e}` are encoded as integers `Σ c_i p^i`, the base-`p`
//! digits being the coefficients of a residue modulo the field's defining
//! polynomial. All arithmetic goes through precomputed tables.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::arith::prime_power;
use crate::error::{Error, Result};

/// Largest field order with arithmetic tables.
pub const MAX_FIELD_ORDER: u64 = 256;

/// Defining polynomials (lowest coefficient first) for the non-prime fields.
pub const MODULI: [(u64, u32, &[u32]); 4] = [
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
];

pub type Elem = u32;

#[derive(Clone)]
pub struct FieldSpec {
    p: u64,
    e: u32,
    q: u64,
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::UnsupportedField(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::UnsupportedField(q));
        }
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|m| m.0 == p && m.1 == e)
                .ok_or(Error::UnsupportedField(q))?
                .2
                .to_vec()
        };
        let qs = q as usize;
        let digits = |x: usize| -> Vec<u64> {
            let mut x = x as u64;
            (0..e)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode =
            |ds: &[u64]| -> Elem { ds.iter().rev().fold(0u64, |acc, &d| acc * p + d) as Elem };
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..qs {
            let da = digits(a);
            for b in 0..qs {
                let db = digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = encode(&sum);
                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0u64; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (e as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c != 0 {
                        prod[k] = 0;
                        for (t, &m) in modulus[..e as usize].iter().enumerate() {
                            let idx = k - e as usize + t;
                            prod[idx] = (prod[idx] + p * p - c * m as u64 % p) % p;
                        }
                    }
                }
                mul[a * qs + b] = encode(&prod[..e as usize]);
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as Elem)
            .collect();
        let mut inv = vec![0; qs];
        for a in 1..qs {
            inv[a] = (1..qs).find(|&b| mul[a * qs + b] == 1).ok_or_else(|| {
                Error::ValidationFailed(format!("modulus for q = {q} is reducible"))
            })? as Elem;
        }
        Ok(Self {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Defining polynomial over `F_p`; `X` for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The element `n·1`.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }
}

/// A polynomial over `F_q`, lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqPoly {
    coeffs: Vec<Elem>,
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        Self { coeffs: vec![0, 1] }
    }

    /// `X^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for FqPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FqPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (_, 1) => {}
                (_, c) => write!(f, "{c}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Polynomial arithmetic over a fixed field.
impl FieldSpec {
    pub fn poly(&self, coeffs: &[i64]) -> FqPoly {
        FqPoly::new(coeffs.iter().map(|&c| self.from_int(c)).collect())
    }

    pub fn p_add(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        FqPoly::new((0..n).map(|i| self.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn p_sub(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        FqPoly::new((0..n).map(|i| self.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn p_scale(&self, a: &FqPoly, c: Elem) -> FqPoly {
        FqPoly::new(a.coeffs.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn p_mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.is_zero() || b.is_zero() {
            return FqPoly::zero();
        }
        let mut out = vec![0; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        FqPoly::new(out)
    }

    /// Quotient and remainder; panics if `b` is zero.
    pub fn p_divrem(&self, a: &FqPoly, b: &FqPoly) -> (FqPoly, FqPoly) {
        assert!(!b.is_zero(), "polynomial division by zero");
        let mut rem = a.coeffs.clone();
        let db = b.degree();
        if rem.len() <= db {
            return (FqPoly::zero(), a.clone());
        }
        let inv_lead = self.inv(b.lead());
        let mut quo = vec![0; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = self.mul(rem[k], inv_lead);
            if c == 0 {
                continue;
            }
            quo[k - db] = c;
            for (t, &y) in b.coeffs.iter().enumerate() {
                let idx = k - db + t;
                rem[idx] = self.sub(rem[idx], self.mul(c, y));
            }
        }
        (FqPoly::new(quo), FqPoly::new(rem))
    }

    pub fn p_rem(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        self.p_divrem(a, b).1
    }

    /// Exact division; panics on a nonzero remainder.
    pub fn p_div(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let (q, r) = self.p_divrem(a, b);
        assert!(r.is_zero(), "{b} does not divide {a}");
        q
    }

    pub fn p_monic(&self, a: &FqPoly) -> FqPoly {
        if a.is_zero() {
            return FqPoly::zero();
        }
        self.p_scale(a, self.inv(a.lead()))
    }

    /// Monic greatest common divisor.
    pub fn p_gcd(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.p_rem(&a, &b);
            a = b;
            b = r;
        }
        self.p_monic(&a)
    }

    pub fn p_derivative(&self, a: &FqPoly) -> FqPoly {
        FqPoly::new(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, self.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn p_pow(&self, a: &FqPoly, mut k: u64) -> FqPoly {
        let (mut base, mut acc) = (a.clone(), FqPoly::one());
        while k > 0 {
            if k & 1 == 1 {
                acc = self.p_mul(&acc, &base);
            }
            base = self.p_mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// `a^k mod m`.
    pub fn p_powmod(&self, a: &FqPoly, k: &BigUint, m: &FqPoly) -> FqPoly {
        let mut acc = self.p_rem(&FqPoly::one(), m);
        let base = self.p_rem(a, m);
        for i in (0..k.bits()).rev() {
            acc = self.p_rem(&self.p_mul(&acc, &acc), m);
            if k.bit(i) {
                acc = self.p_rem(&self.p_mul(&acc, &base), m);
            }
        }
        acc
    }

    /// `a^(q^k) mod m`, by `k` applications of the `q`-power map.
    pub fn p_frobenius(&self, a: &FqPoly, k: usize, m: &FqPoly) -> FqPoly {
        let q = BigUint::from(self.q);
        let mut x = self.p_rem(a, m);
        for _ in 0..k {
            x = self.p_powmod(&x, &q, m);
        }
        x
    }

    pub fn p_eval(&self, a: &FqPoly, x: Elem) -> Elem {
        a.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All monic polynomials of degree `d`, in increasing order.
    pub fn monic_polys(&self, d: usize) -> impl Iterator<Item = FqPoly> + '_ {
        let q = self.q;
        let count = q.pow(d as u32);
        (0..count).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push((idx % q) as Elem);
                idx /= q;
            }
            coeffs.push(1);
            FqPoly::new(coeffs)
        })
    }
}
