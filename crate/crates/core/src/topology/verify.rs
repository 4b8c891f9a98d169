//! Combinatorial-manifold verification and the derived diagnostics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::bistellar::BistellarConfig;
use super::collapse::collapse;
use super::sphere::{is_sphere, SphereCertificate, Strategy, Verdict};
use super::surface::{classify_surface, SurfaceClass};
use crate::complex::{DifferenceCycle, FVector, Simplex, SimplicialComplex};
use crate::enumerate::check_pseudomanifold;
use crate::error::{Error, Result};

/// How 3-dimensional links are certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkStrategy {
    /// Refutations, then bistellar reduction.
    Auto,
    /// Search for a vertex splitting with two collapsible halves.
    BallUnion,
    Bistellar,
}

impl std::str::FromStr for LinkStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(LinkStrategy::Auto),
            "ballunion" | "ball_union" => Ok(LinkStrategy::BallUnion),
            "bistellar" => Ok(LinkStrategy::Bistellar),
            other => Err(Error::InvalidConfig(format!("unknown strategy {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Check one face per C_n-orbit; ignored unless the shift is an automorphism.
    pub use_transitivity: bool,
    pub strategy: LinkStrategy,
    pub bistellar: BistellarConfig,
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            use_transitivity: false,
            strategy: LinkStrategy::Auto,
            bistellar: BistellarConfig::default(),
            jobs: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ManifoldVerdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for ManifoldVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ManifoldVerdict::Yes => "yes",
            ManifoldVerdict::No => "no",
            ManifoldVerdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkVerdict {
    pub face: Simplex,
    /// Number of faces this verdict stands for.
    pub orbit_size: usize,
    pub link_f_vector: FVector,
    pub link_chi: i64,
    pub certificate: SphereCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub dim: usize,
    pub f_vector: FVector,
    pub pseudomanifold: bool,
    pub transitivity_shortcut: bool,
    /// One entry per checked face, ordered by face dimension, then face.
    pub link_verdicts: Vec<LinkVerdict>,
    pub singular_faces: Vec<Simplex>,
    pub eulerian: bool,
    pub is_manifold: ManifoldVerdict,
}

impl VerificationReport {
    /// The verdict covering `face`, directly or through its orbit.
    pub fn verdict_for(&self, face: Simplex, n: usize) -> Option<&LinkVerdict> {
        let rep = if self.transitivity_shortcut { orbit_min(face, n) } else { face };
        self.link_verdicts.iter().find(|v| v.face == rep)
    }

    pub fn negative(&self) -> impl Iterator<Item = &LinkVerdict> {
        self.link_verdicts.iter().filter(|v| v.certificate.verdict == Verdict::NotSphere)
    }

    /// Replays every certificate against a freshly computed link.
    pub fn replay(&self, c: &SimplicialComplex) -> bool {
        self.link_verdicts
            .iter()
            .all(|v| c.link(v.face).map(|lk| v.certificate.replay(&lk)).unwrap_or(false))
    }
}

fn orbit_min(s: Simplex, n: usize) -> Simplex {
    (0..n as u32).map(|k| s.shift(k, n as u32)).min().expect("n > 0")
}

fn orbit(s: Simplex, n: usize) -> Vec<Simplex> {
    let set: BTreeSet<Simplex> = (0..n as u32).map(|k| s.shift(k, n as u32)).collect();
    set.into_iter().collect()
}

/// Verifies with default options.
pub fn verify_manifold(c: &SimplicialComplex, use_transitivity: bool) -> Result<VerificationReport> {
    verify_manifold_with(c, &VerifyOptions { use_transitivity, ..VerifyOptions::default() })
}

pub fn verify_manifold_with(c: &SimplicialComplex, opts: &VerifyOptions) -> Result<VerificationReport> {
    let d = c.dim().ok_or(Error::WrongDimension { expected: 4, found: None })?;
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    if d > 4 {
        return Err(Error::WrongDimension { expected: 4, found: Some(d) });
    }
    let shortcut = opts.use_transitivity && c.is_cyclic();
    let mut work: Vec<(Simplex, usize)> = Vec::new();
    for k in 0..d {
        for &f in c.faces(k) {
            if !shortcut {
                work.push((f, 1));
            } else if orbit_min(f, c.n()) == f {
                work.push((f, orbit(f, c.n()).len()));
            }
        }
    }
    let check = |&(face, orbit_size): &(Simplex, usize)| -> Result<LinkVerdict> {
        let lk = c.link(face)?;
        let link_dim = d - face.len();
        let mut bcfg = opts.bistellar.clone();
        bcfg.seed = bcfg.seed.wrapping_add(face.mask());
        let strategy = match opts.strategy {
            LinkStrategy::Bistellar => Strategy::Bistellar(bcfg),
            LinkStrategy::BallUnion if link_dim == 3 && lk.dim() == Some(3) => match find_ball_union(&lk) {
                Some((a, b)) => Strategy::BallUnion(a, b),
                None => Strategy::Bistellar(BistellarConfig { budget: 0, ..bcfg }),
            },
            _ => Strategy::Auto(bcfg),
        };
        let certificate = is_sphere(&lk, link_dim, &strategy)?;
        Ok(LinkVerdict {
            face,
            orbit_size,
            link_f_vector: lk.f_vector(),
            link_chi: lk.euler_characteristic(),
            certificate,
        })
    };
    let verdicts: Vec<LinkVerdict> = if opts.jobs <= 1 {
        work.iter().map(check).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        pool.install(|| work.par_iter().map(check).collect::<Result<_>>())?
    };

    let mut singular = BTreeSet::new();
    for v in verdicts.iter().filter(|v| v.certificate.verdict == Verdict::NotSphere) {
        if shortcut {
            singular.extend(orbit(v.face, c.n()));
        } else {
            singular.insert(v.face);
        }
    }
    let mut singular_faces: Vec<Simplex> = singular.into_iter().collect();
    singular_faces.sort_by_key(|s| (s.len(), *s));
    let is_manifold = if !singular_faces.is_empty() {
        ManifoldVerdict::No
    } else if verdicts.iter().all(|v| v.certificate.verdict == Verdict::Sphere) {
        ManifoldVerdict::Yes
    } else {
        ManifoldVerdict::Unknown
    };
    Ok(VerificationReport {
        dim: d,
        f_vector: c.f_vector(),
        pseudomanifold: check_pseudomanifold(c).closed,
        transitivity_shortcut: shortcut,
        link_verdicts: verdicts,
        singular_faces,
        eulerian: eulerian_check(c),
        is_manifold,
    })
}

/// Finds a splitting of the vertex set of a 3-complex into two parts whose
/// induced subcomplexes both collapse greedily. Parts are tried in order of
/// increasing mask, the least vertex always in the first part.
pub fn find_ball_union(c: &SimplicialComplex) -> Option<(Simplex, Simplex)> {
    let vs = c.vertices();
    let (first, rest) = vs.split_first()?;
    if rest.len() > 20 {
        return None;
    }
    let all = c.vertex_set();
    for bits in 0u32..(1 << rest.len()) - 1 {
        let mut a = Simplex::vertex(*first);
        for (i, &v) in rest.iter().enumerate() {
            if bits >> i & 1 == 1 {
                a = a.with_vertex(v);
            }
        }
        let b = all.difference(a);
        if collapse(&c.span(a)).collapsible && collapse(&c.span(b)).collapsible {
            return Some((a, b));
        }
    }
    None
}

/// Euler characteristic of the link of every face, from the face lattice.
pub fn link_euler_characteristics(c: &SimplicialComplex) -> BTreeMap<Simplex, i64> {
    let mut chi: BTreeMap<Simplex, i64> = c.all_faces().map(|f| (f, 0)).collect();
    for tau in c.all_faces() {
        for sigma in tau.faces().filter(|s| *s != tau) {
            let sign = if (tau.len() - sigma.len()) % 2 == 1 { 1 } else { -1 };
            *chi.get_mut(&sigma).expect("face") += sign;
        }
    }
    chi
}

/// Whether every face link has the Euler characteristic of a sphere of the
/// right dimension (the empty link of a facet counts as the (-1)-sphere).
pub fn eulerian_check(c: &SimplicialComplex) -> bool {
    let Some(d) = c.dim() else { return true };
    link_euler_characteristics(c).iter().all(|(f, &x)| {
        let m = d as i64 - f.len() as i64;
        x == 1 + if m % 2 == 0 { 1 } else { -1 }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularSurface {
    pub triangles: Vec<Simplex>,
    /// Canonical difference 3-cycles of the triangles.
    pub cycles: Vec<DifferenceCycle>,
    pub class: SurfaceClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularLocus {
    pub faces: Vec<Simplex>,
    /// Closed surfaces carried by the singular triangles, one per connected
    /// component.
    pub surfaces: Vec<SingularSurface>,
    /// Singular triangles not absorbed by any surface.
    pub residue: Vec<Simplex>,
}

/// Singular faces of `c` and the decomposition of its singular triangles.
pub fn singular_locus(c: &SimplicialComplex, opts: &VerifyOptions) -> Result<SingularLocus> {
    let report = verify_manifold_with(c, opts)?;
    Ok(singular_locus_from_report(c, &report))
}

/// Decomposes the singular triangles into closed surfaces.
///
/// Triangles are grouped into C_n-orbits when the complex is cyclic, and
/// singly otherwise. The smallest unions of groups that form closed surfaces
/// are taken first; each accepted union is split into connected components.
pub fn singular_locus_from_report(c: &SimplicialComplex, report: &VerificationReport) -> SingularLocus {
    let n = c.n();
    let triangles: Vec<Simplex> = report.singular_faces.iter().copied().filter(|s| s.len() == 3).collect();
    let groups: Vec<Vec<Simplex>> = if c.is_cyclic() {
        let mut by_rep: BTreeMap<Simplex, Vec<Simplex>> = BTreeMap::new();
        for &t in &triangles {
            by_rep.entry(orbit_min(t, n)).or_default().push(t);
        }
        by_rep.into_values().collect()
    } else {
        triangles.iter().map(|&t| vec![t]).collect()
    };
    let mut used = vec![false; groups.len()];
    let mut surfaces = Vec::new();
    if groups.len() <= 16 {
        for size in 1..=groups.len() {
            for mask in 0u32..1 << groups.len() {
                if mask.count_ones() as usize != size || (0..groups.len()).any(|i| mask >> i & 1 == 1 && used[i]) {
                    continue;
                }
                let tris: Vec<Simplex> =
                    (0..groups.len()).filter(|i| mask >> i & 1 == 1).flat_map(|i| groups[i].iter().copied()).collect();
                let Ok(sub) = SimplicialComplex::from_facets(n, tris) else { continue };
                if !is_closed_surface(&sub) {
                    continue;
                }
                for (i, u) in used.iter_mut().enumerate() {
                    if mask >> i & 1 == 1 {
                        *u = true;
                    }
                }
                for comp in sub.components() {
                    let part: Vec<Simplex> = sub.facets().iter().copied().filter(|t| t.is_subset_of(comp)).collect();
                    let piece = SimplicialComplex::from_facets(n, part.clone()).expect("subset of facets");
                    let class = classify_surface(&piece).expect("closed surface");
                    let cycles: BTreeSet<DifferenceCycle> =
                        part.iter().map(|&t| DifferenceCycle::of_simplex(t, n).expect("triangle")).collect();
                    surfaces.push(SingularSurface { triangles: part, cycles: cycles.into_iter().collect(), class });
                }
            }
        }
    }
    let residue = (0..groups.len()).filter(|&i| !used[i]).flat_map(|i| groups[i].iter().copied()).collect();
    SingularLocus { faces: report.singular_faces.clone(), surfaces, residue }
}

fn is_closed_surface(c: &SimplicialComplex) -> bool {
    c.dim() == Some(2)
        && check_pseudomanifold(c).closed
        && c.vertices().into_iter().all(|v| {
            let lk = c.link(Simplex::vertex(v)).expect("vertex");
            lk.is_connected() && lk.vertices().iter().all(|&u| lk.degree(u) == 2)
        })
}

/// `(val3, val4, val5, val6)`: vertices of `lk(e)` by degree in its 1-skeleton.
pub fn valence_vector(c: &SimplicialComplex, e: Simplex) -> Result<[usize; 4]> {
    if e.len() != 2 {
        return Err(Error::NotAFace(e.to_string()));
    }
    let lk = c.link(e)?;
    let mut out = [0usize; 4];
    for v in lk.vertices() {
        let deg = lk.degree(v);
        if !(3..=6).contains(&deg) {
            return Err(Error::ValenceOutOfRange { edge: e.to_string(), degree: deg });
        }
        out[deg - 3] += 1;
    }
    Ok(out)
}

/// Pairs `{j, j + n/2}`.
pub fn antipodal_pairing(n: usize) -> Vec<(u32, u32)> {
    let h = (n / 2) as u32;
    (0..h).map(|j| (j, j + h)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonCheck {
    pub holds: bool,
    /// Pair-free vertex sets of size at most three that are not faces.
    pub missing: Vec<Simplex>,
}

/// Whether `c` contains the 2-skeleton of the cross-polytope given by
/// `pairing`.
pub fn check_2_hamiltonian(c: &SimplicialComplex, pairing: &[(u32, u32)]) -> Result<HamiltonCheck> {
    let n = c.n();
    let mut seen = Simplex::EMPTY;
    for &(a, b) in pairing {
        if a == b || a as usize >= n || b as usize >= n || seen.contains_vertex(a) || seen.contains_vertex(b) {
            return Err(Error::InvalidPairing(format!("bad pair ({a},{b})")));
        }
        seen = seen.with_vertex(a).with_vertex(b);
    }
    if seen.len() != n {
        return Err(Error::InvalidPairing(format!("pairs cover {} of {n} vertices", seen.len())));
    }
    let mut missing = Vec::new();
    let m = pairing.len();
    // Pick at most one vertex from each of up to three pairs.
    for i in 0..m {
        for side_i in 0..2 {
            let vi = side(pairing[i], side_i);
            let s1 = Simplex::vertex(vi);
            if !c.contains(s1) {
                missing.push(s1);
            }
            for j in i + 1..m {
                for side_j in 0..2 {
                    let s2 = s1.with_vertex(side(pairing[j], side_j));
                    if !c.contains(s2) {
                        missing.push(s2);
                    }
                    for &pk in &pairing[j + 1..m] {
                        for side_k in 0..2 {
                            let s3 = s2.with_vertex(side(pk, side_k));
                            if !c.contains(s3) {
                                missing.push(s3);
                            }
                        }
                    }
                }
            }
        }
    }
    missing.sort_by_key(|s| (s.len(), *s));
    Ok(HamiltonCheck { holds: missing.is_empty(), missing })
}

fn side(p: (u32, u32), s: usize) -> u32 {
    if s == 0 {
        p.0
    } else {
        p.1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary(n: u32) -> SimplicialComplex {
        SimplicialComplex::from_facets(n as usize, Simplex::new(0..n).unwrap().boundary_faces()).unwrap()
    }

    #[test]
    fn four_sphere_is_a_manifold() {
        let c = boundary(6);
        let r = verify_manifold(&c, false).unwrap();
        assert_eq!(r.is_manifold, ManifoldVerdict::Yes);
        assert!(r.eulerian && r.pseudomanifold);
        assert!(r.replay(&c));
        let t = verify_manifold(&c, true).unwrap();
        assert!(t.transitivity_shortcut);
        assert_eq!(t.is_manifold, ManifoldVerdict::Yes);
    }

    #[test]
    fn cross_polytope_is_two_hamiltonian() {
        // boundary of the 3-dimensional cross-polytope on pairs (0,1)(2,3)(4,5)
        let oct = SimplicialComplex::from_facets(
            6,
            ["024", "025", "034", "035", "124", "125", "134", "135"].iter().map(|s| Simplex::parse(s).unwrap()),
        )
        .unwrap();
        let h = check_2_hamiltonian(&oct, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(h.holds);
        assert!(check_2_hamiltonian(&oct, &[(0, 1), (2, 3)]).is_err());
        assert!(check_2_hamiltonian(&oct, &[(0, 1), (1, 2), (4, 5)]).is_err());
    }

    #[test]
    fn link_euler_characteristics_of_a_sphere() {
        let c = boundary(5);
        assert!(eulerian_check(&c));
        let chi = link_euler_characteristics(&c);
        assert_eq!(chi[&Simplex::vertex(0)], 2);
        assert_eq!(chi[&Simplex::parse("01").unwrap()], 0);
    }
}
