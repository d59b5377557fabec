//! Exact integer and rational helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational in lowest terms with a positive denominator.
pub type BigRatio = BigRational;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient with a big upper argument; `k` stays small.
pub fn binomial_big(n: &BigInt, k: usize) -> BigInt {
    if n.is_negative() {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        let top = n - BigInt::from(i);
        if top.is_zero() || top.is_negative() {
            return BigInt::zero();
        }
        acc = acc * top / BigInt::from(i + 1);
    }
    acc
}

pub fn pow(base: &BigInt, exp: usize) -> BigInt {
    num_traits::pow(base.clone(), exp)
}

pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRatio {
    BigRatio::new(n.into(), d.into())
}

pub fn ratio_int(n: impl Into<BigInt>) -> BigRatio {
    BigRatio::from_integer(n.into())
}

/// Converts an exact rational to an integer, panicking with `context` when it
/// is not one. Used where a formula is known to be integral.
pub fn expect_integer(value: BigRatio, context: &str) -> BigInt {
    assert!(
        value.is_integer(),
        "internal error: {context} produced non-integer {value}"
    );
    value.to_integer()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1, "moebius requires n >= 1");
    let factors = prime_factors(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [(n, 1)]
}

/// Splits a prime power `q = p^e` into `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match prime_factors(q).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Number of monic irreducible polynomials of degree `d` over `F_q` other
/// than `X`: the necklace polynomial, minus one when `d = 1`.
pub fn irreducible_count(q: u64, d: u64) -> BigInt {
    let qb = BigInt::from(q);
    let mut total = BigInt::zero();
    for k in divisors(d) {
        let mu = moebius(d / k);
        if mu != 0 {
            total += BigInt::from(mu) * pow(&qb, k as usize);
        }
    }
    let (count, rem) = total.div_rem(&BigInt::from(d));
    debug_assert!(rem.is_zero());
    if d == 1 {
        count - 1
    } else {
        count
    }
}

/// Number of decimal digits of a nonnegative integer.
pub fn digit_count(n: &BigInt) -> usize {
    n.abs().to_str_radix(10).len()
}

pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}
