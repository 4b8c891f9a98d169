//! Simplicial complexes over a small labelled vertex universe.
//!
//! A [`SimplicialComplex`] is stored through its maximal faces plus the full
//! face lattice, one sorted vector per dimension. Membership is answered by
//! binary search, so iteration order is always the lexicographic order of the
//! vertex sequences.

mod bounds;
mod cycle;
pub mod io;
mod simplex;

use std::collections::HashSet;

use serde::Serialize;

pub use bounds::{check_bound_equality, check_dehn_sommerville, BoundEquality, DehnSommerville};
pub use cycle::{canonicalize, expand, orbit_decomposition, DifferenceCycle};
pub use simplex::{parse_vertex_label, vertex_label, Simplex, MAX_VERTICES};

use crate::error::{Error, Result};

/// Face counts `(f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl std::fmt::Display for FVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Simplex>,
    faces: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    /// The complex with no faces at all over a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new(), faces: Vec::new() }
    }

    /// Builds a pure complex from its facets.
    pub fn from_facets<I: IntoIterator<Item = Simplex>>(n: usize, facets: I) -> Result<Self> {
        check_universe(n)?;
        let mut fs: Vec<Simplex> = facets.into_iter().collect();
        fs.sort();
        fs.dedup();
        let mut dim = None;
        for f in &fs {
            if f.is_empty() {
                continue;
            }
            check_vertices(*f, n)?;
            match dim {
                None => dim = Some(f.dim()),
                Some(d) if d != f.dim() => return Err(Error::MixedDimensions(d, f.dim())),
                _ => {}
            }
        }
        fs.retain(|f| !f.is_empty());
        let faces = closure(&fs);
        Ok(SimplicialComplex { n, facets: fs, faces })
    }

    /// Builds the downward closure of arbitrary simplices; the facets are the
    /// maximal faces, which need not share a dimension.
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(n: usize, simplices: I) -> Result<Self> {
        check_universe(n)?;
        let gens: Vec<Simplex> = simplices.into_iter().filter(|s| !s.is_empty()).collect();
        for s in &gens {
            check_vertices(*s, n)?;
        }
        let faces = closure(&gens);
        let facets = maximal_faces(&faces);
        Ok(SimplicialComplex { n, facets, faces })
    }

    /// Builds a complex from difference cycles, taking the union of their orbits.
    pub fn from_cycles(cycles: &[DifferenceCycle]) -> Result<Self> {
        let n = cycles.first().map(|c| c.modulus()).ok_or(Error::EmptyInput)?;
        let mut facets = Vec::new();
        for c in cycles {
            if c.modulus() != n {
                return Err(Error::InvalidConfig(format!("cycle {c} is taken mod {}, expected {n}", c.modulus())));
            }
            facets.extend(expand(c));
        }
        Self::from_facets(n, facets)
    }

    /// Size of the vertex universe `0..n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Faces of dimension `k`, sorted.
    pub fn faces(&self, k: usize) -> &[Simplex] {
        self.faces.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn all_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.faces.iter().flatten().copied()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces.iter().map(Vec::len).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn is_pure(&self) -> bool {
        match self.dim() {
            Some(d) => self.facets.iter().all(|f| f.dim() == d),
            None => true,
        }
    }

    pub fn contains(&self, s: Simplex) -> bool {
        if s.is_empty() {
            return !self.is_empty();
        }
        self.faces(s.dim()).binary_search(&s).is_ok()
    }

    /// Vertex ids that occur in some face.
    pub fn vertices(&self) -> Vec<u32> {
        self.faces(0).iter().filter_map(|v| v.min_vertex()).collect()
    }

    /// Bitmask of all vertices that occur in some face.
    pub fn vertex_set(&self) -> Simplex {
        self.faces(0).iter().fold(Simplex::EMPTY, |acc, v| acc.union(*v))
    }

    pub fn edges(&self) -> &[Simplex] {
        self.faces(1)
    }

    /// Neighbours of `v` in the 1-skeleton.
    pub fn neighbours(&self, v: u32) -> Simplex {
        self.faces(1)
            .iter()
            .filter(|e| e.contains_vertex(v))
            .fold(Simplex::EMPTY, |acc, e| acc.union(e.without_vertex(v)))
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbours(v).len()
    }

    /// Facets containing `s`.
    pub fn star_facets(&self, s: Simplex) -> impl Iterator<Item = Simplex> + '_ {
        self.facets.iter().copied().filter(move |f| s.is_subset_of(*f))
    }

    /// The link of `s`: faces disjoint from `s` whose join with `s` is a face.
    /// Vertex labels are kept; the link of a facet is the empty complex.
    pub fn link(&self, s: Simplex) -> Result<SimplicialComplex> {
        if s.is_empty() || !self.contains(s) {
            return Err(Error::NotAFace(s.to_string()));
        }
        let rest: Vec<Simplex> = self.star_facets(s).map(|f| f.difference(s)).collect();
        if self.is_pure() {
            SimplicialComplex::from_facets(self.n, rest)
        } else {
            SimplicialComplex::from_simplices(self.n, rest)
        }
    }

    /// The subcomplex induced on the vertex set `vs`.
    pub fn span(&self, vs: Simplex) -> SimplicialComplex {
        let faces: Vec<Vec<Simplex>> = self
            .faces
            .iter()
            .map(|fk| fk.iter().copied().filter(|f| f.is_subset_of(vs)).collect::<Vec<_>>())
            .take_while(|fk| !fk.is_empty())
            .collect();
        let facets = maximal_faces(&faces);
        SimplicialComplex { n: self.n, facets, faces }
    }

    /// All vertex pairs of the universe that are not edges.
    pub fn diagonals(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for i in 0..self.n as u32 {
            for j in i + 1..self.n as u32 {
                let e = Simplex::vertex(i).with_vertex(j);
                if !self.contains(e) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// Whether `v -> v + n/2` preserves the facets and no face holds an
    /// antipodal pair.
    pub fn is_centrally_symmetric(&self) -> Result<bool> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::OddVertexCount(self.n));
        }
        let half = (self.n / 2) as u32;
        let antipodal_edge = self.faces(1).iter().any(|e| {
            let v = e.to_vec();
            v[1] - v[0] == half
        });
        if antipodal_edge {
            return Ok(false);
        }
        Ok(self.facets.iter().all(|f| self.is_facet(f.shift(half, self.n as u32))))
    }

    pub fn is_facet(&self, s: Simplex) -> bool {
        self.facets.binary_search(&s).is_ok()
    }

    /// Image of the complex under a vertex permutation given as an image table.
    pub fn relabel(&self, images: &[u8]) -> SimplicialComplex {
        let facets: Vec<Simplex> = self.facets.iter().map(|f| f.map(images)).collect();
        SimplicialComplex::from_simplices(self.n, facets).expect("relabelling stays in the universe")
    }

    /// Whether the vertex map preserves the facet set.
    pub fn is_automorphism(&self, images: &[u8]) -> bool {
        self.facets.iter().all(|f| self.is_facet(f.map(images)))
    }

    /// Whether `i -> i + 1 mod n` is an automorphism.
    pub fn is_cyclic(&self) -> bool {
        let n = self.n as u32;
        self.facets.iter().all(|f| self.is_facet(f.shift(1, n)))
    }

    /// Least element of the C_n-orbit of `s`.
    pub fn orbit_representative(&self, s: Simplex) -> Simplex {
        let n = self.n as u32;
        (0..n).map(|k| s.shift(k, n)).min().expect("n > 0")
    }

    /// Connected components of the 1-skeleton, as vertex sets.
    pub fn components(&self) -> Vec<Simplex> {
        let mut comps: Vec<Simplex> = Vec::new();
        let mut seen = Simplex::EMPTY;
        for v in self.vertices() {
            if seen.contains_vertex(v) {
                continue;
            }
            let mut comp = Simplex::vertex(v);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = Simplex::EMPTY;
                for u in frontier.vertices() {
                    next = next.union(self.neighbours(u));
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

fn check_universe(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::UniverseTooLarge(n));
    }
    Ok(())
}

fn check_vertices(s: Simplex, n: usize) -> Result<()> {
    match s.max_vertex() {
        Some(v) if v as usize >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
        _ => Ok(()),
    }
}

fn closure(gens: &[Simplex]) -> Vec<Vec<Simplex>> {
    let mut seen: HashSet<Simplex> = HashSet::new();
    let mut faces: Vec<Vec<Simplex>> = Vec::new();
    for g in gens {
        for f in g.faces() {
            if seen.insert(f) {
                let k = f.dim();
                if faces.len() <= k {
                    faces.resize_with(k + 1, Vec::new);
                }
                faces[k].push(f);
            }
        }
    }
    for fk in &mut faces {
        fk.sort();
    }
    faces
}

fn maximal_faces(faces: &[Vec<Simplex>]) -> Vec<Simplex> {
    let mut covered: HashSet<Simplex> = HashSet::new();
    for fk in faces.iter().skip(1) {
        for f in fk {
            covered.extend(f.boundary_faces());
        }
    }
    let mut out: Vec<Simplex> = faces.iter().flatten().copied().filter(|f| !covered.contains(f)).collect();
    out.sort();
    out
}
