//! Vertex actions of the symmetry groups of the icosahedron, dodecahedron,
//! 24-cell, 600-cell and 120-cell.
//!
//! Coordinates live in `Q(√5)` so that vertex matching is exact. The
//! packaged datasets under `data/` are the output of [`construct_polytope`]
//! (see `examples/export_polytopes.rs`).

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::path::Path;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{closure, Perm, PermGroup};
use crate::error::{Error, Result};

/// Name, degree and group order of every packaged polytope.
pub const POLYTOPES: [(&str, usize, u64); 5] = [
    ("icosahedron", 12, 120),
    ("dodecahedron", 20, 120),
    ("24-cell", 24, 1152),
    ("600-cell", 120, 14400),
    ("120-cell", 600, 14400),
];

/// On-disk form of a polytope group: 0-based generator image lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDataset {
    pub name: String,
    pub degree: usize,
    pub expected_order: u64,
    pub generators: Vec<Vec<usize>>,
}

impl PolytopeDataset {
    /// Closes the generators and checks the order against `expected_order`.
    pub fn into_group(self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                if g.len() != self.degree {
                    return Err(Error::DatasetCorrupt(format!(
                        "{}: generator of length {} in degree {}",
                        self.name,
                        g.len(),
                        self.degree
                    )));
                }
                Perm::new(g.clone())
                    .map_err(|e| Error::DatasetCorrupt(format!("{}: {e}", self.name)))
            })
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(Error::DatasetCorrupt(format!(
                "{}: no generators",
                self.name
            )));
        }
        let group = closure(&gens)?;
        if group.order() != &BigInt::from(self.expected_order) {
            return Err(Error::DatasetCorrupt(format!(
                "{}: generators close to order {}, expected {}",
                self.name,
                group.order(),
                self.expected_order
            )));
        }
        Ok(group)
    }
}

fn packaged(name: &str) -> Option<&'static str> {
    Some(match name {
        "icosahedron" => include_str!("../../data/icosahedron.json"),
        "dodecahedron" => include_str!("../../data/dodecahedron.json"),
        "24-cell" => include_str!("../../data/24-cell.json"),
        "600-cell" => include_str!("../../data/600-cell.json"),
        "120-cell" => include_str!("../../data/120-cell.json"),
        _ => return None,
    })
}

pub fn parse_dataset(text: &str) -> Result<PolytopeDataset> {
    serde_json::from_str(text).map_err(|e| Error::DatasetCorrupt(e.to_string()))
}

/// The packaged group of the named polytope.
pub fn load_polytope(name: &str) -> Result<PermGroup> {
    let text = packaged(name).ok_or_else(|| Error::UnknownPolytope(name.to_string()))?;
    parse_dataset(text)?.into_group()
}

pub fn load_polytope_file(path: &Path) -> Result<PermGroup> {
    parse_dataset(&std::fs::read_to_string(path)?)?.into_group()
}

/// Builds the dataset from coordinates.
pub fn construct_polytope(name: &str) -> Result<PolytopeDataset> {
    let (vertices, generators): (usize, Vec<Perm>) = match name {
        "icosahedron" => {
            let (v, g) = icosahedron();
            (v.len(), g)
        }
        "dodecahedron" => {
            let (v, g) = icosahedron();
            let faces = cliques(&v, &edge_sq(&v), 3);
            (faces.len(), induced(&faces, &g)?)
        }
        "24-cell" => {
            let (v, g) = cell24();
            (v.len(), g)
        }
        "600-cell" => {
            let (v, g) = cell600()?;
            (v.len(), g)
        }
        "120-cell" => {
            let (v, g) = cell600()?;
            let cells = cliques(&v, &edge_sq(&v), 4);
            (cells.len(), induced(&cells, &g)?)
        }
        _ => return Err(Error::UnknownPolytope(name.to_string())),
    };
    let (_, degree, order) = POLYTOPES.iter().find(|p| p.0 == name).copied().unwrap();
    if degree != vertices {
        return Err(Error::ValidationFailed(format!(
            "{name}: built {vertices} vertices, expected {degree}"
        )));
    }
    Ok(PolytopeDataset {
        name: name.to_string(),
        degree,
        expected_order: order,
        generators: generators.iter().map(Perm::images).collect(),
    })
}

/// `a + b√5`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Q5 {
    a: Rational64,
    b: Rational64,
}

impl Q5 {
    fn new(a: Rational64, b: Rational64) -> Self {
        Self { a, b }
    }

    fn int(a: i64) -> Self {
        Self::new(Rational64::from_integer(a), Rational64::zero())
    }

    fn half(self) -> Self {
        let h = Rational64::new(1, 2);
        Self::new(self.a * h, self.b * h)
    }

    /// Golden ratio `(1+√5)/2`.
    fn phi() -> Self {
        Self::new(Rational64::new(1, 2), Rational64::new(1, 2))
    }

    fn inv(self) -> Self {
        let norm = self.a * self.a - Rational64::from_integer(5) * self.b * self.b;
        Self::new(self.a / norm, -self.b / norm)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl Add for Q5 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Q5 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Q5 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for Q5 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let five = Rational64::from_integer(5);
        Self::new(
            self.a * o.a + five * self.b * o.b,
            self.a * o.b + self.b * o.a,
        )
    }
}

type V<const N: usize> = [Q5; N];

fn dot<const N: usize>(u: &V<N>, v: &V<N>) -> Q5 {
    u.iter()
        .zip(v)
        .fold(Q5::int(0), |acc, (&x, &y)| acc + x * y)
}

fn reflect<const N: usize>(v: &V<N>, r: &V<N>) -> V<N> {
    let c = (dot(v, r) * dot(r, r).inv()) * Q5::int(2);
    std::array::from_fn(|i| v[i] - c * r[i])
}

fn quat_mul(p: &V<4>, q: &V<4>) -> V<4> {
    let [a1, b1, c1, d1] = *p;
    let [a2, b2, c2, d2] = *q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn conj(q: &V<4>) -> V<4> {
    [q[0], -q[1], -q[2], -q[3]]
}

/// The permutation of `points` induced by `f`.
fn perm_of<T: Hash + Eq + Clone>(points: &[T], f: impl Fn(&T) -> T) -> Result<Perm> {
    let index: HashMap<&T, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let images = points
        .iter()
        .map(|p| {
            index.get(&f(p)).copied().ok_or_else(|| {
                Error::ValidationFailed("map does not preserve the vertex set".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Perm::new(images)
}

fn reflections<const N: usize>(vertices: &[V<N>], roots: &[V<N>]) -> Vec<Perm> {
    roots
        .iter()
        .map(|r| {
            perm_of(vertices, |v| reflect(v, r)).expect("root reflection preserves the polytope")
        })
        .collect()
}

fn signs<const N: usize>(v: V<N>) -> Vec<V<N>> {
    let mut out = vec![v];
    for i in 0..N {
        if !v[i].is_zero() {
            out = out
                .into_iter()
                .flat_map(|w| {
                    let mut n = w;
                    n[i] = -n[i];
                    [w, n]
                })
                .collect();
        }
    }
    out
}

fn cyclic3(v: V<3>) -> [V<3>; 3] {
    [v, [v[1], v[2], v[0]], [v[2], v[0], v[1]]]
}

/// Squared length of the shortest nonzero difference of two vertices.
fn edge_sq<const N: usize>(vertices: &[V<N>]) -> Q5 {
    let mut best: Option<(f64, Q5)> = None;
    for u in &vertices[1..] {
        let d: V<N> = std::array::from_fn(|i| u[i] - vertices[0][i]);
        let q = dot(&d, &d);
        let approx = q.a.to_f64() + q.b.to_f64() * 5f64.sqrt();
        if best.is_none_or(|(b, _)| approx < b - 1e-9) {
            best = Some((approx, q));
        }
    }
    best.unwrap().1
}

trait ToF64 {
    fn to_f64(&self) -> f64;
}

impl ToF64 for Rational64 {
    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

/// All `k`-cliques of the edge graph, as sorted vertex index tuples.
fn cliques<const N: usize>(vertices: &[V<N>], edge: &Q5, k: usize) -> Vec<Vec<usize>> {
    let n = vertices.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d: V<N> = std::array::from_fn(|t| vertices[i][t] - vertices[j][t]);
                    i != j && dot(&d, &d) == *edge
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    fn grow(adj: &[Vec<bool>], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().map_or(0, |&l| l + 1);
        for v in start..adj.len() {
            if cur.iter().all(|&u| adj[u][v]) {
                cur.push(v);
                grow(adj, k, cur, out);
                cur.pop();
            }
        }
    }
    grow(&adj, k, &mut Vec::new(), &mut out);
    out
}

/// Action on cliques induced by vertex permutations.
fn induced(cells: &[Vec<usize>], gens: &[Perm]) -> Result<Vec<Perm>> {
    gens.iter()
        .map(|g| {
            perm_of(cells, |c| {
                let mut img: Vec<usize> = c.iter().map(|&v| g.image(v)).collect();
                img.sort_unstable();
                img
            })
        })
        .collect()
}

/// Vertices are the cyclic shifts of `(0, ±1, ±φ)`; the group is generated by
/// the reflections in its 15 mirror planes.
fn icosahedron() -> (Vec<V<3>>, Vec<Perm>) {
    let (zero, one, phi) = (Q5::int(0), Q5::int(1), Q5::phi());
    let vertices: Vec<V<3>> = signs([zero, one, phi])
        .into_iter()
        .flat_map(cyclic3)
        .collect();
    let mut roots: Vec<V<3>> = cyclic3([one, zero, zero]).to_vec();
    let phi_inv = phi.inv();
    for s in signs([phi.half(), one.half(), phi_inv.half()]) {
        if s[0] == phi.half() {
            roots.extend(cyclic3(s));
        }
    }
    let gens = reflections(&vertices, &roots);
    (vertices, gens)
}

fn hurwitz_units() -> Vec<V<4>> {
    let (zero, one) = (Q5::int(0), Q5::int(1));
    let mut units = Vec::new();
    for i in 0..4 {
        let mut v = [zero; 4];
        v[i] = one;
        units.extend(signs(v));
    }
    units.extend(signs([one.half(); 4]));
    units
}

/// The 24 Hurwitz units; the group is `W(F_4)`, generated by the reflections
/// in the 24 units and the 24 vectors `±e_i ± e_j`.
fn cell24() -> (Vec<V<4>>, Vec<Perm>) {
    let (zero, one) = (Q5::int(0), Q5::int(1));
    let vertices = hurwitz_units();
    let mut roots = vertices.clone();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut v = [zero; 4];
            v[i] = one;
            v[j] = one;
            roots.extend(signs(v));
        }
    }
    let gens = reflections(&vertices, &roots);
    (vertices, gens)
}

fn even_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let Some(d) = (0..4).find(|&d| d != a && d != b && d != c) else {
                    continue;
                };
                let p = [a, b, c, d];
                let distinct = a != b && a != c && b != c;
                if distinct {
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// The 120 unit icosians. `H_4` acts by `x ↦ a x`, `x ↦ x a` for icosians `a`,
/// together with `x ↦ x̄`; left and right multiplication by `½(1+i+j+k)` and
/// `½(φ + φ⁻¹i + j)` generate the two unit groups.
fn icosians() -> Vec<V<4>> {
    let (zero, one, phi) = (Q5::int(0), Q5::int(1), Q5::phi());
    let mut out = hurwitz_units();
    let base = [zero, one.half(), phi.inv().half(), phi.half()];
    for p in even_permutations() {
        for s in signs(base) {
            out.push(std::array::from_fn(|i| s[p[i]]));
        }
    }
    out
}

fn cell600() -> Result<(Vec<V<4>>, Vec<Perm>)> {
    let (zero, one, phi) = (Q5::int(0), Q5::int(1), Q5::phi());
    let vertices = icosians();
    let a = [one.half(); 4];
    let b = [phi.half(), phi.inv().half(), one.half(), zero];
    let gens = vec![
        perm_of(&vertices, |x| quat_mul(&a, x))?,
        perm_of(&vertices, |x| quat_mul(&b, x))?,
        perm_of(&vertices, |x| quat_mul(x, &a))?,
        perm_of(&vertices, |x| quat_mul(x, &b))?,
        perm_of(&vertices, conj)?,
    ];
    Ok((vertices, gens))
}
