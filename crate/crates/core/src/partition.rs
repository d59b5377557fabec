//! Integer partitions, the class labels of symmetric groups.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are ordered by size first and then reverse-lexicographically,
/// so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. That is the order in
/// which [`partitions_of`] lists them and in which sorted maps iterate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    size: usize,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts not decreasing: {parts:?}"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the parts and discards zeros.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(parts: Vec<u32>) -> Self {
        let size = parts.iter().map(|&p| p as usize).sum();
        Self { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n as u32])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// `(k^m)`.
    pub fn rectangle(k: u32, m: usize) -> Self {
        Self::from_parts(vec![k; m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `m_k` of each distinct part `k`.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Run-length view `(part, multiplicity)` in decreasing part order.
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ k^{m_k} m_k!`, the centralizer order of a permutation of
    /// cycle type `λ`.
    pub fn z(&self) -> BigInt {
        self.runs().into_iter().fold(BigInt::one(), |acc, (k, m)| {
            acc * num_traits::pow(BigInt::from(k), m) * factorial(m)
        })
    }

    /// Cycle type of the square of a permutation of this cycle type: odd
    /// parts stay, even parts split into two halves.
    pub fn square(&self) -> Self {
        let mut parts = Vec::with_capacity(self.parts.len() * 2);
        for &p in &self.parts {
            if p % 2 == 0 {
                parts.push(p / 2);
                parts.push(p / 2);
            } else {
                parts.push(p);
            }
        }
        Self::from_parts(parts)
    }

    /// Sign `(-1)^{n - ℓ(λ)}` of a permutation of this cycle type.
    pub fn signature(&self) -> i32 {
        if (self.size - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiset union of the parts.
    pub fn merge(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Self {
            parts,
            size: self.size + other.size,
        }
    }

    /// Every part multiplied by `factor`.
    pub fn scale(&self, factor: u32) -> Self {
        Self::from_sorted(self.parts.iter().map(|&p| p * factor).collect())
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Self::from_sorted(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `3,2,1`, `(3,2,1)` or `3 2 1`; the empty string is the empty
/// partition. Parts are sorted, so `1,3` gives `(3,1)`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad partition part `{tok}`")))?;
            if p == 0 {
                return Err(Error::InvalidInput(
                    "partition parts must be positive".into(),
                ));
            }
            parts.push(p);
        }
        Ok(Self::from_parts(parts))
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`
/// and ending at `(1^n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = vec![n as u32];
    loop {
        out.push(Partition::from_sorted(current.clone()));
        // Strip trailing ones, decrement the last part > 1 and refill.
        let mut ones = 0usize;
        while current.last() == Some(&1) {
            current.pop();
            ones += 1;
        }
        let Some(last) = current.pop() else { break };
        let k = last - 1;
        current.push(k);
        let mut rest = ones + 1;
        while rest > 0 {
            let take = rest.min(k as usize);
            current.push(take as u32);
            rest -= take;
        }
    }
    out
}

/// Partitions of `n` whose parts are all at most `max_part`.
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.parts().first().is_none_or(|&f| f as usize <= max_part))
        .collect()
}
