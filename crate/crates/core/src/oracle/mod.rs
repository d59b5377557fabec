//! Brute-force ground truth for the counting formulas.
//!
//! Nothing here calls into the formula modules: permutations, cycle types,
//! matrices and irreducibility are all reimplemented directly. Only the
//! field tables and the plain data types (partitions, rationals) are shared.

mod matrix;
mod perm;
mod tableaux;

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use crate::error::{Error, Result};

pub use matrix::{
    brute_gl, brute_gl_class, brute_gl_young, brute_irreducibles, brute_perm_matrices,
    GlClassifier, Matrix, MATRIX_GUARD,
};
pub use perm::{
    brute_cycle_index, brute_cycle_type, brute_signed_cycle_type, brute_signed_group,
    brute_signed_parabolic, brute_symmetric, perm_group_from_generators, PermVec,
};
pub use tableaux::{brute_contingency, brute_kostka, brute_matrix_total};

type ComposeFn<E> = Box<dyn Fn(&E, &E) -> E + Send + Sync>;

/// A finite group given by the full list of its elements.
pub struct ExplicitGroup<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    compose: ComposeFn<E>,
    identity: E,
}

impl<E: Clone + Eq + Hash> ExplicitGroup<E> {
    /// `compose(a, b)` is the product `a·b`.
    pub fn new(
        elements: Vec<E>,
        identity: E,
        compose: impl Fn(&E, &E) -> E + Send + Sync + 'static,
    ) -> Self {
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        Self {
            elements,
            index,
            compose: Box::new(compose),
            identity,
        }
    }

    /// Closes `generators` under `compose`.
    pub fn generated_by(
        generators: &[E],
        identity: E,
        compose: impl Fn(&E, &E) -> E + Send + Sync + 'static,
    ) -> Self {
        let mut elements = vec![identity.clone()];
        let mut seen: HashMap<E, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let h = compose(&elements[i], g);
                if !seen.contains_key(&h) {
                    seen.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            i += 1;
        }
        Self::new(elements, identity, compose)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn compose(&self, a: &E, b: &E) -> E {
        (self.compose)(a, b)
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Inverse found by search.
    pub fn invert(&self, a: &E) -> E {
        let mut power = a.clone();
        loop {
            let next = self.compose(&power, a);
            if next == self.identity {
                return power;
            }
            power = next;
        }
    }

    /// Checks that `subset` is a subgroup and returns a small generating set,
    /// picked greedily.
    fn check_subgroup(&self, subset: &[E]) -> Result<Vec<usize>> {
        let mut idx: Vec<usize> = subset
            .iter()
            .map(|e| self.index_of(e).ok_or(Error::NotASubgroup))
            .collect::<Result<_>>()?;
        idx.sort_unstable();
        idx.dedup();
        let members: HashSet<usize> = idx.iter().copied().collect();
        let one = self.index[&self.identity];
        if !members.contains(&one) {
            return Err(Error::NotASubgroup);
        }
        let mut gens = Vec::new();
        let mut span: HashSet<usize> = HashSet::from([one]);
        for &x in &idx {
            if span.contains(&x) {
                continue;
            }
            gens.push(x);
            let mut queue: Vec<usize> = span.iter().copied().collect();
            while let Some(y) = queue.pop() {
                for &s in &gens {
                    let z = self.index[&self.compose(&self.elements[y], &self.elements[s])];
                    if !members.contains(&z) {
                        return Err(Error::NotASubgroup);
                    }
                    if span.insert(z) {
                        queue.push(z);
                    }
                }
            }
        }
        Ok(gens)
    }
}

/// The double cosets `HgK`, each as a sorted list of element indices.
pub fn brute_double_cosets<E: Clone + Eq + Hash>(
    g: &ExplicitGroup<E>,
    h: &[E],
    k: &[E],
) -> Result<Vec<Vec<usize>>> {
    let hgens = g.check_subgroup(h)?;
    let kgens = g.check_subgroup(k)?;
    let mut owner = vec![usize::MAX; g.order()];
    let mut cosets = Vec::new();
    for start in 0..g.order() {
        if owner[start] != usize::MAX {
            continue;
        }
        let id = cosets.len();
        owner[start] = id;
        let mut members = vec![start];
        let mut next = 0;
        while next < members.len() {
            let x = &g.elements[members[next]];
            next += 1;
            let left = hgens.iter().map(|&a| g.compose(&g.elements[a], x));
            let right = kgens.iter().map(|&b| g.compose(x, &g.elements[b]));
            for y in left.chain(right).collect::<Vec<_>>() {
                let y = g.index[&y];
                if owner[y] == usize::MAX {
                    owner[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        cosets.push(members);
    }
    Ok(cosets)
}

fn self_inverse_flags<E: Clone + Eq + Hash>(
    g: &ExplicitGroup<E>,
    cosets: &[Vec<usize>],
) -> Vec<bool> {
    let mut owner = vec![0; g.order()];
    for (i, c) in cosets.iter().enumerate() {
        for &x in c {
            owner[x] = i;
        }
    }
    cosets
        .iter()
        .enumerate()
        .map(|(i, c)| owner[g.index[&g.invert(&g.elements[c[0]])]] == i)
        .collect()
}

/// Number of double cosets `D ∈ H\G/H` with `D⁻¹ = D`.
pub fn brute_self_inverse<E: Clone + Eq + Hash>(g: &ExplicitGroup<E>, h: &[E]) -> Result<usize> {
    let cosets = brute_double_cosets(g, h, h)?;
    Ok(self_inverse_flags(g, &cosets)
        .into_iter()
        .filter(|&b| b)
        .count())
}

/// `|{x ∈ G : x² = y}|`.
pub fn brute_sq_roots<E: Clone + Eq + Hash>(g: &ExplicitGroup<E>, y: &E) -> usize {
    g.elements.iter().filter(|x| &g.compose(x, x) == y).count()
}

/// Every self-inverse double coset of `H\G/H` holds exactly `|H|` elements
/// whose square lies in `H`, and every other double coset holds none.
pub fn brute_involution_doublecoset_claim<E: Clone + Eq + Hash>(
    g: &ExplicitGroup<E>,
    h: &[E],
) -> Result<bool> {
    let cosets = brute_double_cosets(g, h, h)?;
    let flags = self_inverse_flags(g, &cosets);
    let members: std::collections::HashSet<&E> = h.iter().collect();
    let hsize = members.len();
    Ok(cosets.iter().zip(flags).all(|(c, self_inverse)| {
        let count = c
            .iter()
            .filter(|&&x| {
                let e = &g.elements[x];
                members.contains(&g.compose(e, e))
            })
            .count();
        count == if self_inverse { hsize } else { 0 }
    }))
}
