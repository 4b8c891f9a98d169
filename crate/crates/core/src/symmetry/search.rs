//! Backtracking searches for face-preserving vertex bijections.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use super::group::{PermutationGroup, MATERIALIZATION_CAP};
use super::perm::Permutation;
use crate::complex::{FVector, Simplex, SimplicialComplex};
use crate::error::{Error, Result};

const UNSET: u8 = u8::MAX;

/// Per-vertex invariant used to rank and prune candidate images:
/// the degree, then the sorted facet-degrees of incident edges.
type VertexKey = (usize, Vec<usize>);

fn vertex_keys(c: &SimplicialComplex) -> BTreeMap<u32, VertexKey> {
    let mut edge_deg: BTreeMap<Simplex, usize> = BTreeMap::new();
    for f in c.facets() {
        for e in f.faces().filter(|s| s.len() == 2) {
            *edge_deg.entry(e).or_default() += 1;
        }
    }
    c.vertices()
        .into_iter()
        .map(|v| {
            let mut inc: Vec<usize> =
                c.edges().iter().filter(|e| e.contains_vertex(v)).map(|e| edge_deg.get(e).copied().unwrap_or(0)).collect();
            inc.sort_unstable();
            (v, (c.degree(v), inc))
        })
        .collect()
}

struct Matcher<'a> {
    c2: &'a SimplicialComplex,
    adj1: Vec<u64>,
    adj2: Vec<u64>,
    keys1: BTreeMap<u32, VertexKey>,
    keys2: BTreeMap<u32, VertexKey>,
    targets: Vec<u32>,
    /// Search order over the vertices of `c1`.
    order: Vec<u32>,
    /// Facets of `c1` whose last vertex in `order` sits at each position.
    closing: Vec<Vec<Simplex>>,
}

impl<'a> Matcher<'a> {
    fn new(c1: &'a SimplicialComplex, c2: &'a SimplicialComplex, seeded: &[u32]) -> Self {
        let adj = |c: &SimplicialComplex| (0..c.n() as u32).map(|v| c.neighbours(v).mask()).collect::<Vec<_>>();
        let adj1 = adj(c1);
        // Seeds first, then greedily the vertex with most placed neighbours.
        let mut order: Vec<u32> = seeded.to_vec();
        let mut placed = Simplex::new(seeded.iter().copied()).expect("in universe");
        let mut rest: Vec<u32> = c1.vertices().into_iter().filter(|v| !placed.contains_vertex(*v)).collect();
        while !rest.is_empty() {
            let (i, _) = rest
                .iter()
                .enumerate()
                .max_by_key(|(_, &v)| ((adj1[v as usize] & placed.mask()).count_ones(), std::cmp::Reverse(v)))
                .expect("non-empty");
            let v = rest.remove(i);
            placed = placed.with_vertex(v);
            order.push(v);
        }
        let pos: BTreeMap<u32, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut closing = vec![Vec::new(); order.len()];
        for &f in c1.facets() {
            let last = f.vertices().map(|v| pos[&v]).max().expect("non-empty facet");
            closing[last].push(f);
        }
        Matcher {
            c2,
            adj1,
            adj2: adj(c2),
            keys1: vertex_keys(c1),
            keys2: vertex_keys(c2),
            targets: c2.vertices(),
            order,
            closing,
        }
    }

    /// All bijections extending `seed`, as image tables over the labels of
    /// `c1` (non-vertices stay [`UNSET`]). Stops after `limit` results.
    fn run(&self, seed: &[(u32, u32)], limit: usize) -> Vec<Vec<u8>> {
        let n1 = self.adj1.len();
        let mut map = vec![UNSET; n1.max(1)];
        let mut used = 0u64;
        for &(a, b) in seed {
            map[a as usize] = b as u8;
            used |= 1 << b;
        }
        // Seeds must be consistent among themselves.
        for (i, &(a, b)) in seed.iter().enumerate() {
            if !self.compatible(&map, &self.order[..i], a, b) || self.keys1.get(&a) != self.keys2.get(&b) {
                return Vec::new();
            }
        }
        if !seed.iter().enumerate().all(|(i, _)| self.facets_ok(&map, i)) {
            return Vec::new();
        }
        let mut out = Vec::new();
        self.extend(seed.len(), &mut map, used, limit, &mut out);
        out
    }

    fn compatible(&self, map: &[u8], placed: &[u32], a: u32, b: u32) -> bool {
        placed.iter().all(|&u| {
            let w = map[u as usize] as u32;
            (self.adj1[a as usize] >> u & 1) == (self.adj2[b as usize] >> w & 1)
        })
    }

    fn facets_ok(&self, map: &[u8], pos: usize) -> bool {
        self.closing[pos].iter().all(|f| self.c2.is_facet(f.map(map)))
    }

    fn extend(&self, depth: usize, map: &mut Vec<u8>, used: u64, limit: usize, out: &mut Vec<Vec<u8>>) {
        if out.len() >= limit {
            return;
        }
        if depth == self.order.len() {
            out.push(map.clone());
            return;
        }
        let a = self.order[depth];
        let key = &self.keys1[&a];
        for &b in &self.targets {
            if used >> b & 1 == 1 || &self.keys2[&b] != key || !self.compatible(map, &self.order[..depth], a, b) {
                continue;
            }
            map[a as usize] = b as u8;
            if self.facets_ok(map, depth) {
                self.extend(depth + 1, map, used | 1 << b, limit, out);
            }
            map[a as usize] = UNSET;
        }
    }
}

/// Fills the unmapped labels of `0..n` with the unused ones, in order.
fn complete(partial: &[u8], n: usize) -> Permutation {
    let mut images = vec![UNSET; n];
    images[..partial.len().min(n)].copy_from_slice(&partial[..partial.len().min(n)]);
    let mut used = vec![false; n];
    for &b in images.iter().filter(|&&b| b != UNSET) {
        used[b as usize] = true;
    }
    let mut free = (0..n as u8).filter(|&b| !used[b as usize]);
    for slot in images.iter_mut().filter(|b| **b == UNSET) {
        *slot = free.next().expect("counts agree");
    }
    Permutation::from_images(images).expect("a bijection")
}

fn same_size(c1: &SimplicialComplex, c2: &SimplicialComplex) -> bool {
    c1.f_vector() == c2.f_vector()
}

/// Face-preserving bijections `lk(v1, c1) -> lk(v2, c2)`, each extended to a
/// permutation of `0..max(n1, n2)` sending `v1` to `v2` and the remaining
/// labels in increasing order. Empty when either vertex is missing.
pub fn link_bijections(c1: &SimplicialComplex, v1: u32, c2: &SimplicialComplex, v2: u32) -> Vec<Permutation> {
    let (Ok(l1), Ok(l2)) = (c1.link(Simplex::vertex(v1)), c2.link(Simplex::vertex(v2))) else {
        return Vec::new();
    };
    if !same_size(&l1, &l2) {
        return Vec::new();
    }
    let n = c1.n().max(c2.n());
    Matcher::new(&l1, &l2, &[])
        .run(&[], usize::MAX)
        .into_iter()
        .map(|mut m| {
            m.resize(n, UNSET);
            m[v1 as usize] = v2 as u8;
            complete(&m, n)
        })
        .collect()
}

/// The full automorphism group, materialized up to `MATERIALIZATION_CAP`.
pub fn automorphisms(c: &SimplicialComplex) -> Result<PermutationGroup> {
    automorphisms_with_cap(c, MATERIALIZATION_CAP)
}

/// Fixes the least vertex `v0`; for each admissible image `w`, extends each
/// link bijection `lk(v0) -> lk(w)` to the whole complex.
pub fn automorphisms_with_cap(c: &SimplicialComplex, cap: usize) -> Result<PermutationGroup> {
    let n = c.n();
    let Some(&v0) = c.vertices().first() else {
        return Ok(PermutationGroup::trivial(n));
    };
    let per_target: Vec<Vec<Vec<u8>>> = c
        .vertices()
        .into_par_iter()
        .map(|w| {
            let links = link_bijections(c, v0, c, w);
            let seeds: Vec<Vec<(u32, u32)>> = if links.is_empty() {
                vec![vec![(v0, w)]]
            } else {
                let lk = c.link(Simplex::vertex(v0)).expect("v0 is a vertex").vertex_set();
                links
                    .iter()
                    .map(|p| std::iter::once((v0, w)).chain(lk.vertices().map(|u| (u, p.apply(u)))).collect())
                    .collect()
            };
            let mut found = Vec::new();
            for seed in seeds {
                let order_seed: Vec<u32> = seed.iter().map(|s| s.0).collect();
                let m = Matcher::new(c, c, &order_seed);
                found.extend(m.run(&seed, cap + 1));
                if found.len() > cap {
                    break;
                }
            }
            found
        })
        .collect();
    let total: usize = per_target.iter().map(Vec::len).sum();
    if total > cap {
        return Err(Error::GroupTooLarge { order: total, cap });
    }
    let elements = per_target.into_iter().flatten().map(|m| complete(&m, n)).collect();
    Ok(PermutationGroup::from_elements(n, elements))
}

/// Units `a` mod `n` for which `i -> a * i` is an automorphism.
pub fn multipliers(c: &SimplicialComplex) -> Result<Vec<u32>> {
    if !c.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let n = c.n() as u32;
    Ok((1..n.max(2))
        .filter(|a| a.gcd(&n) == 1)
        .filter(|&a| c.is_automorphism(Permutation::multiplier(a, n as usize).expect("unit").images()))
        .collect())
}

/// The image of `c` under `i -> a * i mod n`.
pub fn multiplier_image(c: &SimplicialComplex, a: u32) -> Result<SimplicialComplex> {
    let p = Permutation::multiplier(a, c.n())?;
    Ok(c.relabel(p.images()))
}

/// Why two complexes are not isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "invariant", rename_all = "snake_case")]
pub enum Refutation {
    FVector { left: FVector, right: FVector },
    DegreeSequence { left: Vec<usize>, right: Vec<usize> },
    /// Sorted per-edge histograms of vertex degrees in the edge link.
    ValenceVectors { left: Vec<Vec<usize>>, right: Vec<Vec<usize>> },
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Isomorphism {
    Bijection(Permutation),
    Refuted(Refutation),
}

impl Isomorphism {
    pub fn bijection(&self) -> Option<&Permutation> {
        match self {
            Isomorphism::Bijection(p) => Some(p),
            Isomorphism::Refuted(_) => None,
        }
    }
}

/// Multiset of edge-link degree histograms; for edges of a combinatorial
/// 4-manifold with degrees in 3..=6 these are the valence vectors.
pub fn valence_multiset(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = c
        .edges()
        .iter()
        .map(|&e| {
            let lk = c.link(e).expect("edge of c");
            let mut hist = Vec::new();
            for v in lk.vertices() {
                let d = lk.degree(v);
                if hist.len() <= d {
                    hist.resize(d + 1, 0);
                }
                hist[d] += 1;
            }
            hist
        })
        .collect();
    out.sort();
    out
}

fn degree_sequence(c: &SimplicialComplex) -> Vec<usize> {
    let mut d: Vec<usize> = c.vertices().into_iter().map(|v| c.degree(v)).collect();
    d.sort_unstable();
    d
}

/// A facet-preserving bijection `c1 -> c2`, or the first invariant that
/// tells them apart.
pub fn is_isomorphic(c1: &SimplicialComplex, c2: &SimplicialComplex) -> Isomorphism {
    let (f1, f2) = (c1.f_vector(), c2.f_vector());
    if f1 != f2 {
        return Isomorphism::Refuted(Refutation::FVector { left: f1, right: f2 });
    }
    let (d1, d2) = (degree_sequence(c1), degree_sequence(c2));
    if d1 != d2 {
        return Isomorphism::Refuted(Refutation::DegreeSequence { left: d1, right: d2 });
    }
    let (v1, v2) = (valence_multiset(c1), valence_multiset(c2));
    if v1 != v2 {
        return Isomorphism::Refuted(Refutation::ValenceVectors { left: v1, right: v2 });
    }
    let n = c1.n().max(c2.n());
    match Matcher::new(c1, c2, &[]).run(&[], 1).pop() {
        Some(mut m) => {
            m.resize(n, UNSET);
            Isomorphism::Bijection(complete(&m, n))
        }
        None => Isomorphism::Refuted(Refutation::Exhausted),
    }
}
