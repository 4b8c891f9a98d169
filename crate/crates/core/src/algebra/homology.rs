use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::matrix::{smith_normal_form, IntegerMatrix, SmithForm};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Boundary map `C_k -> C_{k-1}` with rows indexed by `faces(k-1)` and
/// columns by `faces(k)`, oriented by the increasing vertex order.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> IntegerMatrix {
    let cols = c.faces(k);
    if k == 0 {
        return IntegerMatrix::zeros(0, cols.len());
    }
    let rows = c.faces(k - 1);
    let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
    for (j, f) in cols.iter().enumerate() {
        for (i, r) in f.boundary_faces().enumerate() {
            let row = rows.binary_search(&r).expect("closed under faces");
            m.set(row, j, BigInt::from(if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    m
}

/// Coboundary map `C^k -> C^{k+1}`, the transpose of `boundary_matrix(k+1)`.
pub fn coboundary_matrix(c: &SimplicialComplex, k: usize) -> IntegerMatrix {
    boundary_matrix(c, k + 1).transpose()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    /// Torsion coefficients of `H_k`, one list per dimension.
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<Vec<BigInt>>,
    pub chi: i64,
}

fn serialize_torsion<S: serde::Serializer>(t: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<Vec<String>> = t.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
    strs.serialize(s)
}

impl HomologyProfile {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// Integral homology of the `d`-sphere.
    pub fn is_sphere_like(&self, d: usize) -> bool {
        let mut want = vec![0; d + 1];
        want[0] = 1;
        want[d] += 1;
        self.is_torsion_free() && self.betti == want
    }
}

/// Integral simplicial homology from Smith forms of the boundary maps.
pub fn homology(c: &SimplicialComplex) -> HomologyProfile {
    let Some(d) = c.dim() else {
        return HomologyProfile { betti: Vec::new(), torsion: Vec::new(), chi: 0 };
    };
    let forms: Vec<SmithForm> = (0..=d + 1)
        .map(|k| {
            if k == 0 || k > d {
                SmithForm { diagonal: Vec::new(), rank: 0 }
            } else {
                smith_normal_form(&boundary_matrix(c, k))
            }
        })
        .collect();
    let fv = c.f_vector();
    let betti: Vec<usize> = (0..=d).map(|k| fv.0[k] - forms[k].rank - forms[k + 1].rank).collect();
    let torsion: Vec<Vec<BigInt>> = (0..=d).map(|k| forms[k + 1].torsion()).collect();
    let chi = betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    HomologyProfile { betti, torsion, chi }
}

/// Coherent facet signs, component by component, so that the signed facet
/// sum has zero boundary away from boundary ridges. `None` when no coherent
/// choice exists.
pub fn orient(c: &SimplicialComplex) -> Result<Option<Vec<i8>>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = c.facets();
    if c.dim().unwrap_or(0) == 0 {
        return Ok(Some(vec![1; facets.len()]));
    }
    // ridge -> [(facet index, coefficient of the ridge in its boundary)]
    let mut ridges: HashMap<Simplex, Vec<(usize, i8)>> = HashMap::new();
    for (fi, f) in facets.iter().enumerate() {
        for (i, r) in f.boundary_faces().enumerate() {
            ridges.entry(r).or_default().push((fi, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    if let Some((r, _)) = ridges.iter().find(|(_, v)| v.len() > 2) {
        return Err(Error::RidgeDegree(r.to_string()));
    }
    let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); facets.len()];
    for inc in ridges.values() {
        if let [(a, ca), (b, cb)] = inc[..] {
            // s_a * ca + s_b * cb = 0  =>  s_b = -s_a * ca * cb
            adj[a].push((b, -ca * cb));
            adj[b].push((a, -ca * cb));
        }
    }
    let mut sign = vec![0i8; facets.len()];
    for start in 0..facets.len() {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for &(b, rel) in &adj[a] {
                let want = sign[a] * rel;
                if sign[b] == 0 {
                    sign[b] = want;
                    stack.push(b);
                } else if sign[b] != want {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(sign))
}

/// Boundary of a chain given as `(simplex, coefficient)` pairs, with zero
/// terms dropped.
pub fn chain_boundary(chain: &[(Simplex, i64)]) -> Vec<(Simplex, i64)> {
    let mut acc: HashMap<Simplex, i64> = HashMap::new();
    for &(s, coef) in chain {
        if s.len() <= 1 {
            continue;
        }
        for (i, r) in s.boundary_faces().enumerate() {
            *acc.entry(r).or_insert(0) += if i % 2 == 0 { coef } else { -coef };
        }
    }
    let mut out: Vec<(Simplex, i64)> = acc.into_iter().filter(|(_, v)| *v != 0).collect();
    out.sort();
    out
}

/// The signed facet chain of an oriented pure complex.
pub fn fundamental_chain(c: &SimplicialComplex) -> Result<Option<Vec<(Simplex, i64)>>> {
    Ok(orient(c)?.map(|signs| c.facets().iter().zip(signs).map(|(&f, s)| (f, s as i64)).collect()))
}

/// An oriented 2-cycle carried by a closed surface subcomplex.
pub fn surface_cycle(surface: &SimplicialComplex) -> Result<Vec<(Simplex, i64)>> {
    let chain = fundamental_chain(surface)?.ok_or_else(|| Error::FormPrecondition("surface is not orientable".into()))?;
    if !chain_boundary(&chain).is_empty() {
        return Err(Error::FormPrecondition("surface has boundary".into()));
    }
    Ok(chain)
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary_of(s: &str) -> SimplicialComplex {
        let top = Simplex::parse(s).unwrap();
        SimplicialComplex::from_facets(top.len(), top.boundary_faces()).unwrap()
    }

    #[test]
    fn three_sphere_homology() {
        let h = homology(&boundary_of("01234"));
        assert_eq!(h.betti, vec![1, 0, 0, 1]);
        assert!(h.is_torsion_free());
        assert!(h.is_sphere_like(3));
        assert_eq!(h.chi, 0);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = boundary_of("012345");
        for k in 1..c.dim().unwrap() {
            assert!(boundary_matrix(&c, k).mul(&boundary_matrix(&c, k + 1)).is_zero());
            assert!(coboundary_matrix(&c, k).mul(&coboundary_matrix(&c, k - 1)).is_zero());
        }
    }

    #[test]
    fn projective_plane_has_torsion() {
        // six-vertex RP^2
        let fs = ["012", "023", "034", "045", "015", "124", "235", "134", "245", "135"]
            .iter()
            .map(|s| Simplex::parse(s).unwrap());
        let rp2 = SimplicialComplex::from_facets(6, fs).unwrap();
        let h = homology(&rp2);
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
        assert_eq!(orient(&rp2).unwrap(), None);
    }

    #[test]
    fn orientation_of_sphere_and_mobius_strip() {
        let c = boundary_of("01234");
        let chain = fundamental_chain(&c).unwrap().unwrap();
        assert!(chain_boundary(&chain).is_empty());
        let mobius = ["012", "123", "234", "340", "401"].iter().map(|s| Simplex::parse(s).unwrap());
        let m = SimplicialComplex::from_facets(5, mobius).unwrap();
        assert_eq!(orient(&m).unwrap(), None);
    }

    #[test]
    fn orient_rejects_branching() {
        let c = SimplicialComplex::from_facets(5, ["012", "013", "014"].iter().map(|s| Simplex::parse(s).unwrap()))
            .unwrap();
        assert!(matches!(orient(&c), Err(Error::RidgeDegree(_))));
    }
}
