//! Integer polynomials in a formal variable `q`, and exact interpolation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::BigRatio;
use crate::error::{Error, Result};

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn has_positive_coefficients(&self) -> bool {
        !self.coeffs.is_empty() && self.coeffs.iter().all(|c| c.is_positive())
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "q")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree below `points.len()` through all points,
/// computed with exact Newton divided differences. Fails if a coefficient is
/// not an integer.
pub fn lagrange_interpolate(points: &[(BigInt, BigInt)]) -> Result<QPoly> {
    if points.is_empty() {
        return Err(Error::InvalidInput(
            "interpolation needs at least one point".into(),
        ));
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].0 == points[j].0 {
                return Err(Error::InvalidInput(format!(
                    "duplicate interpolation node {}",
                    points[i].0
                )));
            }
        }
    }
    let xs: Vec<BigRatio> = points
        .iter()
        .map(|(x, _)| BigRatio::from_integer(x.clone()))
        .collect();
    let mut table: Vec<BigRatio> = points
        .iter()
        .map(|(_, y)| BigRatio::from_integer(y.clone()))
        .collect();
    let n = points.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Expand the Newton form c0 + c1 (x - x0) + c2 (x - x0)(x - x1) + ...
    let mut coeffs = vec![BigRatio::zero(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - x_i) + table[i]
        let mut next = vec![BigRatio::zero(); n];
        for d in 0..n {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += &coeffs[d];
            }
            next[d] -= &coeffs[d] * &xs[i];
        }
        next[0] += &table[i];
        coeffs = next;
    }
    let mut out = Vec::with_capacity(n);
    for (degree, c) in coeffs.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficients {
                degree,
                coefficient: c.to_string(),
            });
        }
        out.push(c.to_integer());
    }
    Ok(QPoly::new(out))
}
