use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::orient;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceClass {
    pub chi: i64,
    pub orientable: bool,
    pub boundary_components: usize,
    pub connected: bool,
}

impl SurfaceClass {
    /// Orientable genus or number of crosscaps, for connected surfaces.
    pub fn genus(&self) -> Option<i64> {
        if !self.connected {
            return None;
        }
        let g2 = 2 - self.chi - self.boundary_components as i64;
        Some(if self.orientable { g2 / 2 } else { g2 })
    }

    pub fn is_torus(&self) -> bool {
        self.connected && self.orientable && self.boundary_components == 0 && self.chi == 0
    }

    pub fn is_mobius_strip(&self) -> bool {
        self.connected && !self.orientable && self.boundary_components == 1 && self.chi == 0
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match (self.connected, self.orientable, self.boundary_components, self.genus()) {
            (false, ..) => return write!(f, "disconnected surface (chi={})", self.chi),
            (_, true, 0, Some(0)) => "sphere".to_string(),
            (_, true, 0, Some(1)) => "torus".to_string(),
            (_, true, 1, Some(0)) => "disk".to_string(),
            (_, true, 2, Some(0)) => "annulus".to_string(),
            (_, false, 0, Some(1)) => "projective plane".to_string(),
            (_, false, 0, Some(2)) => "Klein bottle".to_string(),
            (_, false, 1, Some(1)) => "Moebius strip".to_string(),
            (_, o, b, Some(g)) => {
                format!("{} genus {g} with {b} boundary component(s)", if o { "orientable" } else { "non-orientable" })
            }
            _ => unreachable!(),
        };
        write!(f, "{name} (chi={})", self.chi)
    }
}

/// Classifies a pure 2-dimensional complex whose vertex links are single
/// paths or cycles.
pub fn classify_surface(c: &SimplicialComplex) -> Result<SurfaceClass> {
    if c.dim() != Some(2) || !c.is_pure() {
        return Err(Error::WrongDimension { expected: 2, found: c.dim() });
    }
    let mut edge_deg: BTreeMap<Simplex, usize> = BTreeMap::new();
    for t in c.facets() {
        for e in t.boundary_faces() {
            *edge_deg.entry(e).or_default() += 1;
        }
    }
    if let Some((e, _)) = edge_deg.iter().find(|(_, &k)| k > 2) {
        return Err(Error::RidgeDegree(e.to_string()));
    }
    for v in c.vertices() {
        let lk = c.link(Simplex::vertex(v))?;
        if !is_path_or_cycle(&lk) {
            return Err(Error::FormPrecondition(format!("link of vertex {} is not a path or cycle", Simplex::vertex(v))));
        }
    }
    let boundary: Vec<Simplex> = edge_deg.iter().filter(|(_, &k)| k == 1).map(|(e, _)| *e).collect();
    let boundary_components = if boundary.is_empty() {
        0
    } else {
        SimplicialComplex::from_facets(c.n(), boundary)?.components().len()
    };
    Ok(SurfaceClass {
        chi: c.euler_characteristic(),
        orientable: orient(c)?.is_some(),
        boundary_components,
        connected: c.is_connected(),
    })
}

/// Whether a 1-dimensional complex is a single path or a single cycle.
fn is_path_or_cycle(c: &SimplicialComplex) -> bool {
    if c.dim() != Some(1) || !c.is_connected() {
        return false;
    }
    let degs: Vec<usize> = c.vertices().iter().map(|&v| c.degree(v)).collect();
    let ends = degs.iter().filter(|&&d| d == 1).count();
    degs.iter().all(|&d| d == 1 || d == 2) && (ends == 0 || ends == 2)
}

/// Unordered splittings of a 10-vertex 3-complex into two 5-sets whose spans
/// are both Moebius strips. Each part must be a clique of the 1-skeleton.
pub fn mobius_partitions(c: &SimplicialComplex) -> Result<Vec<(Simplex, Simplex)>> {
    let vs = c.vertices();
    if vs.len() != 10 {
        return Err(Error::WrongVertexCount { expected: 10, found: vs.len() });
    }
    let all = c.vertex_set();
    let first = vs[0];
    let mut out = Vec::new();
    let rest = &vs[1..];
    // Choose 4 more vertices to join the least one.
    let mut pick = |part: Simplex| {
        let other = all.difference(part);
        if !is_clique(c, part) || !is_clique(c, other) {
            return;
        }
        let ok = |p: Simplex| {
            let span = c.span(p);
            span.dim() == Some(2) && span.is_pure() && classify_surface(&span).map(|s| s.is_mobius_strip()).unwrap_or(false)
        };
        if ok(part) && ok(other) {
            out.push((part, other));
        }
    };
    for a in 0..rest.len() {
        for b in a + 1..rest.len() {
            for d in b + 1..rest.len() {
                for e in d + 1..rest.len() {
                    pick(Simplex::vertex(first).with_vertex(rest[a]).with_vertex(rest[b]).with_vertex(rest[d]).with_vertex(rest[e]));
                }
            }
        }
    }
    Ok(out)
}

fn is_clique(c: &SimplicialComplex, vs: Simplex) -> bool {
    let v = vs.to_vec();
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| c.contains(Simplex::vertex(v[i]).with_vertex(v[j]))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|s| Simplex::parse(s).unwrap())).unwrap()
    }

    #[test]
    fn classifies_basic_surfaces() {
        let oct = cx(6, &["024", "025", "034", "035", "124", "125", "134", "135"]);
        let s = classify_surface(&oct).unwrap();
        assert_eq!((s.chi, s.orientable, s.boundary_components), (2, true, 0));
        assert_eq!(s.to_string(), "sphere (chi=2)");
        let mobius = cx(5, &["012", "123", "234", "034", "014"]);
        let m = classify_surface(&mobius).unwrap();
        assert!(m.is_mobius_strip());
        let disk = cx(4, &["012", "023"]);
        assert_eq!(classify_surface(&disk).unwrap().to_string(), "disk (chi=1)");
    }

    #[test]
    fn seven_vertex_torus() {
        let fs: Vec<Simplex> = (0..7u32)
            .flat_map(|x| {
                [
                    Simplex::new([x, (x + 1) % 7, (x + 3) % 7]).unwrap(),
                    Simplex::new([x, (x + 2) % 7, (x + 3) % 7]).unwrap(),
                ]
            })
            .collect();
        let t = SimplicialComplex::from_facets(7, fs).unwrap();
        assert!(classify_surface(&t).unwrap().is_torus());
    }
}
