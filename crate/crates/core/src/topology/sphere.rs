//! Sphere certificates for links.

use std::fmt;

use serde::Serialize;

use super::bistellar::{reduce_to_simplex_boundary, replay_flips, BistellarConfig, Flip};
use super::collapse::{collapse, replay_collapse};
use crate::algebra::homology;
use crate::complex::{Simplex, SimplicialComplex};
use crate::enumerate::check_pseudomanifold;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Sphere,
    NotSphere,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Sphere => "sphere",
            Verdict::NotSphere => "not_sphere",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    CycleCheck,
    BallUnion,
    Bistellar,
    HomologyRefute,
    DisconnectedRefute,
    /// Some vertex link of a 3-complex is not a 2-sphere.
    LinkRefute,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::CycleCheck => "cycle_check",
            Method::BallUnion => "ball_union",
            Method::Bistellar => "bistellar",
            Method::HomologyRefute => "homology_refute",
            Method::DisconnectedRefute => "disconnected_refute",
            Method::LinkRefute => "link_refute",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    None,
    /// Facet count of a 0-dimensional complex.
    PointCount { count: usize },
    /// Vertices visited once around a circle.
    Cycle { order: Vec<Simplex> },
    /// Vertices whose links are not single circles.
    PinchedVertices { vertices: Vec<Simplex> },
    /// Euler characteristic differing from the sphere value.
    EulerCharacteristic { chi: i64 },
    /// Ridges outside exactly two facets.
    BadRidges { ridges: Vec<Simplex> },
    Components { components: Vec<Simplex> },
    /// A vertex whose link is not a sphere.
    BadVertex { vertex: Simplex },
    Homology { betti: Vec<usize>, torsion_free: bool },
    Collapses { parts: [Simplex; 2], sequences: [Vec<(Simplex, Simplex)>; 2] },
    Flips { flips: Vec<Flip> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereCertificate {
    pub dim: usize,
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Witness,
}

impl SphereCertificate {
    fn new(dim: usize, verdict: Verdict, method: Method, witness: Witness) -> Self {
        SphereCertificate { dim, verdict, method, witness }
    }

    /// Re-checks the witness against `c` independently of how it was found.
    /// Unknown verdicts replay trivially.
    pub fn replay(&self, c: &SimplicialComplex) -> bool {
        match (&self.witness, self.verdict) {
            (_, Verdict::Unknown) => true,
            (Witness::PointCount { count }, v) => {
                (c.dim() == Some(0) || c.is_empty()) && c.facets().len() == *count && ((*count == 2) == (v == Verdict::Sphere))
            }
            (Witness::Cycle { order }, Verdict::Sphere) => replay_cycle(c, order),
            // A 2-sphere certificate is the local check itself.
            (Witness::None, Verdict::Sphere) => {
                self.dim == 2 && is_sphere_2(c).map(|r| r.verdict == Verdict::Sphere).unwrap_or(false)
            }
            (Witness::PinchedVertices { vertices }, Verdict::NotSphere) => {
                !vertices.is_empty()
                    && vertices.iter().all(|v| c.link(*v).map(|lk| !is_circle(&lk)).unwrap_or(false))
            }
            (Witness::EulerCharacteristic { chi }, Verdict::NotSphere) => {
                c.euler_characteristic() == *chi && *chi != sphere_chi(self.dim)
            }
            (Witness::BadRidges { ridges }, Verdict::NotSphere) => {
                let pm = check_pseudomanifold(c);
                !ridges.is_empty() && ridges.iter().all(|r| pm.bad_ridges.iter().any(|(b, _)| b == r))
            }
            (Witness::Components { components }, Verdict::NotSphere) => {
                components.len() > 1 && c.components() == *components
            }
            (Witness::BadVertex { vertex }, Verdict::NotSphere) => c
                .link(*vertex)
                .map(|lk| is_sphere_2(&lk).map(|cert| cert.verdict == Verdict::NotSphere).unwrap_or(true))
                .unwrap_or(false),
            (Witness::Homology { betti, torsion_free }, Verdict::NotSphere) => {
                let h = homology(c);
                h.betti == *betti && h.is_torsion_free() == *torsion_free && !h.is_sphere_like(self.dim)
            }
            (Witness::Collapses { parts, sequences }, Verdict::Sphere) => {
                is_closed_3_manifold(c)
                    && parts[0].union(parts[1]) == c.vertex_set()
                    && parts[0].is_disjoint(parts[1])
                    && replay_collapse(&c.span(parts[0]), &sequences[0])
                    && replay_collapse(&c.span(parts[1]), &sequences[1])
            }
            (Witness::Flips { flips }, Verdict::Sphere) => {
                c.is_pure() && c.dim() == Some(self.dim) && replay_flips(self.dim, c.facets(), flips)
            }
            _ => false,
        }
    }
}

fn sphere_chi(dim: usize) -> i64 {
    if dim.is_multiple_of(2) {
        2
    } else {
        0
    }
}

fn is_circle(c: &SimplicialComplex) -> bool {
    c.dim() == Some(1) && c.is_connected() && c.vertices().iter().all(|&v| c.degree(v) == 2)
}

/// The vertices of a circle in traversal order, starting at the least.
fn circle_order(c: &SimplicialComplex) -> Option<Vec<Simplex>> {
    if !is_circle(c) {
        return None;
    }
    let vs = c.vertices();
    let mut order = vec![vs[0]];
    let mut prev = None;
    let mut cur = vs[0];
    loop {
        let next = c.neighbours(cur).vertices().find(|&u| Some(u) != prev)?;
        if next == vs[0] {
            break;
        }
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    (order.len() == vs.len()).then(|| order.into_iter().map(Simplex::vertex).collect())
}

fn replay_cycle(c: &SimplicialComplex, order: &[Simplex]) -> bool {
    let k = order.len();
    if k < 3 || c.dim() != Some(1) || c.facets().len() != k || c.faces(0).len() != k {
        return false;
    }
    (0..k).all(|i| c.is_facet(order[i].union(order[(i + 1) % k])))
}

/// Certifies 0- and 1-dimensional spheres.
pub fn is_sphere_low(c: &SimplicialComplex, dim: usize) -> Result<SphereCertificate> {
    match dim {
        0 => {
            if c.dim().is_some_and(|d| d != 0) {
                return Err(Error::WrongDimension { expected: 0, found: c.dim() });
            }
            let count = c.facets().len();
            let v = if count == 2 { Verdict::Sphere } else { Verdict::NotSphere };
            Ok(SphereCertificate::new(0, v, Method::CycleCheck, Witness::PointCount { count }))
        }
        1 => {
            if c.dim() != Some(1) || !c.is_pure() {
                return Err(Error::WrongDimension { expected: 1, found: c.dim() });
            }
            if !c.is_connected() {
                return Ok(disconnected(1, c));
            }
            Ok(match circle_order(c) {
                Some(order) => SphereCertificate::new(1, Verdict::Sphere, Method::CycleCheck, Witness::Cycle { order }),
                None => {
                    let bad: Vec<Simplex> =
                        c.vertices().into_iter().filter(|&v| c.degree(v) != 2).map(Simplex::vertex).collect();
                    SphereCertificate::new(1, Verdict::NotSphere, Method::CycleCheck, Witness::PinchedVertices { vertices: bad })
                }
            })
        }
        _ => Err(Error::WrongDimension { expected: 1, found: Some(dim) }),
    }
}

fn disconnected(dim: usize, c: &SimplicialComplex) -> SphereCertificate {
    SphereCertificate::new(
        dim,
        Verdict::NotSphere,
        Method::DisconnectedRefute,
        Witness::Components { components: c.components() },
    )
}

/// 2-sphere test: connected, every vertex link a single circle, and `chi = 2`.
pub fn is_sphere_2(c: &SimplicialComplex) -> Result<SphereCertificate> {
    if c.dim() != Some(2) || !c.is_pure() {
        return Err(Error::WrongDimension { expected: 2, found: c.dim() });
    }
    if !c.is_connected() {
        return Ok(disconnected(2, c));
    }
    let pinched: Vec<Simplex> = c
        .vertices()
        .into_iter()
        .map(Simplex::vertex)
        .filter(|&v| !is_circle(&c.link(v).expect("vertex of c")))
        .collect();
    if !pinched.is_empty() {
        return Ok(SphereCertificate::new(
            2,
            Verdict::NotSphere,
            Method::CycleCheck,
            Witness::PinchedVertices { vertices: pinched },
        ));
    }
    let chi = c.euler_characteristic();
    if chi != 2 {
        return Ok(SphereCertificate::new(2, Verdict::NotSphere, Method::CycleCheck, Witness::EulerCharacteristic { chi }));
    }
    Ok(SphereCertificate::new(2, Verdict::Sphere, Method::CycleCheck, Witness::None))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    BallUnion(Simplex, Simplex),
    Bistellar(BistellarConfig),
    Auto(BistellarConfig),
}

/// Whether `c` is a connected closed pseudomanifold all of whose vertex
/// links are 2-spheres.
fn is_closed_3_manifold(c: &SimplicialComplex) -> bool {
    c.dim() == Some(3) && c.is_pure() && c.is_connected() && check_pseudomanifold(c).closed && bad_vertex(c).is_none()
}

fn bad_vertex(c: &SimplicialComplex) -> Option<Simplex> {
    c.vertices().into_iter().map(Simplex::vertex).find(|&v| {
        let lk = c.link(v).expect("vertex of c");
        !(lk.dim() == Some(2) && lk.is_pure() && is_sphere_2(&lk).map(|r| r.verdict == Verdict::Sphere).unwrap_or(false))
    })
}

/// 3-sphere certificates.
///
/// `BallUnion(a, b)` needs a closed 3-manifold whose vertex set splits into
/// `a` and `b` with both induced subcomplexes collapsible: their regular
/// neighbourhoods are then two 3-balls glued along their common boundary.
pub fn is_sphere_3(c: &SimplicialComplex, strategy: &Strategy) -> Result<SphereCertificate> {
    if c.dim() != Some(3) || !c.is_pure() {
        return Err(Error::WrongDimension { expected: 3, found: c.dim() });
    }
    match strategy {
        Strategy::BallUnion(a, b) => {
            if !a.is_disjoint(*b) || a.union(*b) != c.vertex_set() {
                return Err(Error::InvalidPartition(format!("{a} and {b} do not split the vertex set")));
            }
            if let Some(cert) = refute_3(c, false) {
                return Ok(cert);
            }
            let (ra, rb) = (collapse(&c.span(*a)), collapse(&c.span(*b)));
            if ra.collapsible && rb.collapsible {
                Ok(SphereCertificate::new(
                    3,
                    Verdict::Sphere,
                    Method::BallUnion,
                    Witness::Collapses { parts: [*a, *b], sequences: [ra.sequence, rb.sequence] },
                ))
            } else {
                Ok(SphereCertificate::new(3, Verdict::Unknown, Method::BallUnion, Witness::None))
            }
        }
        Strategy::Bistellar(cfg) => Ok(bistellar(c, cfg)),
        Strategy::Auto(cfg) => Ok(refute_3(c, true).unwrap_or_else(|| bistellar(c, cfg))),
    }
}

/// Cheap refutations: connectivity, ridges, vertex links and optionally
/// homology.
fn refute_3(c: &SimplicialComplex, with_homology: bool) -> Option<SphereCertificate> {
    if !c.is_connected() {
        return Some(disconnected(3, c));
    }
    let pm = check_pseudomanifold(c);
    if !pm.closed {
        let ridges = pm.bad_ridges.iter().map(|(r, _)| *r).collect();
        return Some(SphereCertificate::new(3, Verdict::NotSphere, Method::LinkRefute, Witness::BadRidges { ridges }));
    }
    if let Some(vertex) = bad_vertex(c) {
        return Some(SphereCertificate::new(3, Verdict::NotSphere, Method::LinkRefute, Witness::BadVertex { vertex }));
    }
    if with_homology {
        let h = homology(c);
        if !h.is_sphere_like(3) {
            return Some(SphereCertificate::new(
                3,
                Verdict::NotSphere,
                Method::HomologyRefute,
                Witness::Homology { torsion_free: h.is_torsion_free(), betti: h.betti },
            ));
        }
    }
    None
}

fn bistellar(c: &SimplicialComplex, cfg: &BistellarConfig) -> SphereCertificate {
    match reduce_to_simplex_boundary(3, c.facets(), cfg) {
        Some(flips) => SphereCertificate::new(3, Verdict::Sphere, Method::Bistellar, Witness::Flips { flips }),
        None => SphereCertificate::new(3, Verdict::Unknown, Method::Bistellar, Witness::None),
    }
}

/// Dispatches on `dim`: 0 and 1 by counting, 2 by [`is_sphere_2`], 3 by the
/// given strategy.
pub fn is_sphere(c: &SimplicialComplex, dim: usize, strategy: &Strategy) -> Result<SphereCertificate> {
    if c.dim() != Some(dim) && !(dim == 0 && c.is_empty()) {
        // Wrong-dimensional links are not spheres of the expected dimension.
        return Ok(SphereCertificate::new(
            dim,
            Verdict::NotSphere,
            Method::CycleCheck,
            Witness::EulerCharacteristic { chi: c.euler_characteristic() },
        ));
    }
    match dim {
        0 | 1 => is_sphere_low(c, dim),
        2 => is_sphere_2(c),
        3 => is_sphere_3(c, strategy),
        _ => Err(Error::WrongDimension { expected: 3, found: Some(dim) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary(n: u32) -> SimplicialComplex {
        SimplicialComplex::from_facets(n as usize, Simplex::new(0..n).unwrap().boundary_faces()).unwrap()
    }

    #[test]
    fn low_dimensional_spheres() {
        let c = boundary(3);
        let cert = is_sphere_low(&c, 1).unwrap();
        assert_eq!(cert.verdict, Verdict::Sphere);
        assert!(cert.replay(&c));
        let two = boundary(2);
        assert_eq!(is_sphere_low(&two, 0).unwrap().verdict, Verdict::Sphere);
    }

    #[test]
    fn octahedron_is_a_two_sphere() {
        let oct = SimplicialComplex::from_facets(
            6,
            ["024", "025", "034", "035", "124", "125", "134", "135"].iter().map(|s| Simplex::parse(s).unwrap()),
        )
        .unwrap();
        let cert = is_sphere_2(&oct).unwrap();
        assert_eq!(cert.verdict, Verdict::Sphere);
        assert!(cert.replay(&oct));
    }

    #[test]
    fn three_sphere_strategies() {
        let c = boundary(5);
        let cert = is_sphere_3(&c, &Strategy::Auto(BistellarConfig::default())).unwrap();
        assert_eq!(cert.verdict, Verdict::Sphere);
        assert_eq!(cert.witness, Witness::Flips { flips: Vec::new() });
        assert!(cert.replay(&c));
        let split = is_sphere_3(&c, &Strategy::BallUnion(Simplex::parse("01").unwrap(), Simplex::parse("234").unwrap()))
            .unwrap();
        assert_eq!(split.verdict, Verdict::Sphere);
        assert!(split.replay(&c));
        assert!(is_sphere_3(&c, &Strategy::BallUnion(Simplex::parse("01").unwrap(), Simplex::parse("23").unwrap())).is_err());
    }

    #[test]
    fn two_disjoint_boundaries_are_not_a_sphere() {
        let fs = Simplex::new(0..5)
            .unwrap()
            .boundary_faces()
            .chain(Simplex::new(5..10).unwrap().boundary_faces())
            .collect::<Vec<_>>();
        let c = SimplicialComplex::from_facets(10, fs).unwrap();
        let cert = is_sphere_3(&c, &Strategy::Auto(BistellarConfig::default())).unwrap();
        assert_eq!((cert.verdict, cert.method), (Verdict::NotSphere, Method::DisconnectedRefute));
        assert!(cert.replay(&c));
    }
}
