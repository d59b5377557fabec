//! Permutation groups given by generators, enumerated in full.

mod polytope;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{factorial, BigRatio};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::PartitionVector;

pub use polytope::{
    construct_polytope, load_polytope, load_polytope_file, parse_dataset, PolytopeDataset,
    POLYTOPES,
};

/// Default limit on the number of elements [`closure`] will enumerate.
pub const DEFAULT_ORDER_CAP: usize = 200_000;

/// A permutation of `{0, ..., d-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Validates that `images` is a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        if d > u16::MAX as usize {
            return Err(Error::InvalidInput(format!("degree {d} is too large")));
        }
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Self {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (t, &a) in cycle.iter().enumerate() {
                let b = cycle[(t + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(Error::InvalidInput(format!(
                        "point {} out of range",
                        a.max(b)
                    )));
                }
                images[a] = b;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation with 1-based points, fixed points omitted.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", i + 1)?;
                i = self.image(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub fn cycle_type(p: &Perm) -> Partition {
    let mut seen = vec![false; p.degree()];
    let mut parts = Vec::new();
    for start in 0..p.degree() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p.image(i);
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_parts(parts)
}

/// A subgroup of `S_d` with its generators. Elements are enumerated on first
/// use and cached.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    order: BigInt,
    cap: usize,
    elements: OnceLock<Vec<Perm>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// A group whose order is known in advance; enumeration is deferred.
    fn with_known_order(degree: usize, generators: Vec<Perm>, order: BigInt) -> Self {
        Self {
            degree,
            generators,
            order,
            cap: DEFAULT_ORDER_CAP,
            elements: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    /// All elements, enumerating them if needed.
    pub fn elements(&self) -> Result<&[Perm]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let e = enumerate(self.degree, &self.generators, self.cap)?;
        Ok(self.elements.get_or_init(|| e))
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        Ok(self.elements()?.binary_search(p).is_ok())
    }
}

fn enumerate(degree: usize, generators: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in generators {
                let h = s.compose(g);
                if !seen.contains(&h) {
                    if seen.len() >= cap {
                        return Err(Error::OrderLimitExceeded { cap });
                    }
                    seen.insert(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Perm> = seen.into_iter().collect();
    all.sort_unstable();
    Ok(all)
}

/// The subgroup generated by `generators`, enumerated breadth-first.
pub fn closure(generators: &[Perm]) -> Result<PermGroup> {
    closure_with_cap(generators, DEFAULT_ORDER_CAP)
}

pub fn closure_with_cap(generators: &[Perm], cap: usize) -> Result<PermGroup> {
    let degree = generators.first().map_or(0, Perm::degree);
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch(degree, g.degree()));
    }
    let elements = enumerate(degree, generators, cap)?;
    Ok(PermGroup {
        degree,
        generators: generators.to_vec(),
        order: BigInt::from(elements.len()),
        cap,
        elements: OnceLock::from(elements),
    })
}

/// Fraction of the group in each cycle type.
pub fn cycle_index(g: &PermGroup) -> Result<PartitionVector> {
    let elements = g.elements()?;
    let counts = elements
        .par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<Partition, u64>, p| {
            *acc.entry(cycle_type(p)).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let order = BigInt::from(elements.len());
    Ok(PartitionVector::from_entries(
        g.degree(),
        counts
            .into_iter()
            .map(|(k, v)| (k, BigRatio::new(BigInt::from(v), order.clone()))),
    ))
}

/// Symmetries of the `n`-cube acting on its `2^n` vertices, vertex `v`
/// being the bit vector of its coordinates.
pub fn hypercube_group(n: usize) -> Result<PermGroup> {
    if !(1..=12).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "hypercube dimension {n} out of range 1..=12"
        )));
    }
    let d = 1usize << n;
    let mut gens = vec![Perm::new((0..d).map(|v| v ^ 1).collect())?];
    for i in 0..n - 1 {
        gens.push(Perm::new(
            (0..d)
                .map(|v| {
                    let (a, b) = (v >> i & 1, v >> (i + 1) & 1);
                    v & !(3 << i) | b << i | a << (i + 1)
                })
                .collect(),
        )?);
    }
    Ok(PermGroup::with_known_order(d, gens, factorial(n) << n))
}

/// Symmetries of the `n`-dimensional cross-polytope on its `2n` vertices;
/// opposite vertices are the pairs `{2i, 2i+1}`.
pub fn hyperoctahedron_group(n: usize) -> Result<PermGroup> {
    if !(1..=1000).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "hyperoctahedron dimension {n} out of range"
        )));
    }
    let d = 2 * n;
    let mut gens = vec![Perm::from_cycles(d, &[&[0, 1]])?];
    for i in 0..n - 1 {
        gens.push(Perm::from_cycles(
            d,
            &[&[2 * i, 2 * i + 2], &[2 * i + 1, 2 * i + 3]],
        )?);
    }
    Ok(PermGroup::with_known_order(d, gens, factorial(n) << n))
}

/// The double coset of `σ` in `B̃_n \ S_2n / B̃_n`: the cycles of the graph
/// joining `2i, 2i+1` and `σ(2i), σ(2i+1)`, halved.
pub fn ds_classify(sigma: &Perm) -> Result<Partition> {
    let d = sigma.degree();
    if !d.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("degree {d} is odd")));
    }
    let inv = sigma.inverse();
    // second matching: v = σ(j) is joined to σ(j ^ 1)
    let other = |v: usize| sigma.image(inv.image(v) ^ 1);
    let mut seen = vec![false; d];
    let mut parts = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        loop {
            seen[v] = true;
            let w = v ^ 1;
            seen[w] = true;
            len += 2;
            v = other(w);
            if v == start {
                break;
            }
        }
        parts.push(len / 2);
    }
    Ok(Partition::from_parts(parts))
}

/// Number of involutions (identity included) of `S_2n` lying in the double
/// coset `B̃_λ`.
pub fn btilde_involution_count(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let mut denom = BigInt::from(1);
    let mut prod = BigInt::from(1);
    for (k, m) in lambda.runs() {
        let k = k as usize;
        let a = (factorial(k) * factorial(k - 1)) << (2 * k - 1);
        let b = if k.is_multiple_of(2) {
            factorial(k) << (k - 1)
        } else {
            (factorial(k - 1) * (k + 1)) << (k - 1)
        };
        denom *= factorial(m) * num_traits::pow(factorial(k), m);
        let mut sum = BigInt::from(0);
        for i in 0..=m / 2 {
            sum += num_traits::pow(a.clone(), i)
                * num_traits::pow(b.clone(), m - 2 * i)
                * factorial(m)
                / ((factorial(i) << i) * factorial(m - 2 * i));
        }
        prod *= sum;
    }
    factorial(n) * prod / denom
}
