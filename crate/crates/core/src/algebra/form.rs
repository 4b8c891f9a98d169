//! Intersection form of a closed oriented 4-dimensional complex.
//!
//! Degree-2 cohomology is read off the Smith forms of the coboundary maps and
//! paired through the Alexander-Whitney cup product
//! `(a ∪ b)(v0..v4) = a(v0 v1 v2) b(v2 v3 v4)`, evaluated on the signed facet
//! sum from [`orient`](super::orient).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::homology::{boundary_matrix, chain_boundary, is_zero_vec, orient};
use super::matrix::{kernel_basis, smith_decomposition, IntegerMatrix};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormClass {
    pub gram: IntegerMatrix,
    pub rank: usize,
    pub parity: Parity,
    pub signature: i64,
    pub determinant: BigInt,
}

impl FormClass {
    pub fn of_gram(gram: IntegerMatrix) -> Self {
        let n = gram.rows();
        let parity = if (0..n).all(|i| gram.get(i, i).is_even()) { Parity::Even } else { Parity::Odd };
        let poly = characteristic_polynomial(&gram);
        // p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0, coefficients low to high
        let zero_roots = poly.iter().take_while(|c| c.is_zero()).count();
        let positive = sign_changes(poly.iter());
        let flipped: Vec<BigInt> =
            poly.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect();
        let negative = sign_changes(flipped.iter());
        debug_assert_eq!(positive + negative + zero_roots, n);
        let determinant = if n.is_multiple_of(2) { poly[0].clone() } else { -poly[0].clone() };
        FormClass {
            rank: n - zero_roots,
            parity,
            signature: positive as i64 - negative as i64,
            determinant,
            gram,
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant.abs().is_one()
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    /// Rank 2, even and signature 0: for a unimodular form this pins down
    /// the hyperbolic plane `(0 1 / 1 0)`.
    pub fn is_hyperbolic_plane(&self) -> bool {
        self.rank == 2 && self.gram.rows() == 2 && self.parity == Parity::Even && self.signature == 0 && self.is_unimodular()
    }
}

trait IsEven {
    fn is_even(&self) -> bool;
}

impl IsEven for BigInt {
    fn is_even(&self) -> bool {
        num_integer::Integer::is_even(self)
    }
}

fn sign_changes<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for c in coeffs {
        let s = if c.is_positive() { 1 } else if c.is_negative() { -1 } else { 0 };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Characteristic polynomial `det(x I - A)` by Faddeev-LeVerrier, with
/// coefficients listed from the constant term up.
pub fn characteristic_polynomial(a: &IntegerMatrix) -> Vec<BigInt> {
    let n = a.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntegerMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
        let mut next = a.mul(&m);
        for i in 0..n {
            let v = next.get(i, i) + &coeffs[n - k + 1];
            next.set(i, i, v);
        }
        m = next;
        let am = a.mul(&m);
        let trace: BigInt = (0..n).map(|i| am.get(i, i).clone()).sum();
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    coeffs
}

/// Degree-2 cohomology generators of a closed oriented 4-complex, with the
/// cup-product pairing between them.
#[derive(Clone, Debug)]
pub struct IntersectionForm {
    /// Triangles of the complex, indexing the cochain coordinates.
    pub triangles: Vec<Simplex>,
    /// One integer cocycle per generator, valued on `triangles`.
    pub cocycles: Vec<Vec<BigInt>>,
    pub class: FormClass,
}

impl IntersectionForm {
    pub fn compute(c: &SimplicialComplex) -> Result<Self> {
        if c.dim() != Some(4) {
            return Err(Error::WrongDimension { expected: 4, found: c.dim() });
        }
        if !crate::enumerate::check_pseudomanifold(c).strongly_connected {
            return Err(Error::FormPrecondition("complex is not strongly connected".into()));
        }
        let signs = orient(c)?.ok_or_else(|| Error::FormPrecondition("complex is not orientable".into()))?;
        let fundamental: Vec<(Simplex, i64)> =
            c.facets().iter().zip(&signs).map(|(&f, &s)| (f, s as i64)).collect();
        if !chain_boundary(&fundamental).is_empty() {
            return Err(Error::FormPrecondition("complex is not closed".into()));
        }
        let cocycles = h2_generators(c)?;
        let triangles = c.faces(2).to_vec();
        let idx = |s: Simplex| triangles.binary_search(&s).expect("triangle of the complex");
        let g = cocycles.len();
        let mut gram = IntegerMatrix::zeros(g, g);
        for (f, sign) in &fundamental {
            let v = f.to_vec();
            let front = idx(Simplex::new(v[0..3].iter().copied()).expect("face"));
            let back = idx(Simplex::new(v[2..5].iter().copied()).expect("face"));
            for (i, ci) in cocycles.iter().enumerate() {
                let a = &ci[front];
                if a.is_zero() {
                    continue;
                }
                for (j, cj) in cocycles.iter().enumerate() {
                    let b = &cj[back];
                    if !b.is_zero() {
                        let cur = gram.get(i, j) + a * b * BigInt::from(*sign);
                        gram.set(i, j, cur);
                    }
                }
            }
        }
        Ok(IntersectionForm { triangles, cocycles, class: FormClass::of_gram(gram) })
    }

    /// Values of each generator on a 2-chain.
    pub fn evaluate(&self, chain: &[(Simplex, i64)]) -> Result<Vec<BigInt>> {
        if !chain_boundary(chain).is_empty() {
            return Err(Error::FormPrecondition("chain is not a cycle".into()));
        }
        let mut coords = Vec::with_capacity(chain.len());
        for (s, coef) in chain {
            let i = self.triangles.binary_search(s).map_err(|_| Error::NotAFace(s.label()))?;
            coords.push((i, BigInt::from(*coef)));
        }
        Ok(self
            .cocycles
            .iter()
            .map(|alpha| coords.iter().map(|(i, coef)| &alpha[*i] * coef).sum())
            .collect())
    }

    /// Intersection number of two integral 2-cycles, `e1^T Q^{-1} e2` where
    /// `e` lists the generator values on each cycle.
    pub fn intersect(&self, z1: &[(Simplex, i64)], z2: &[(Simplex, i64)]) -> Result<BigInt> {
        if !self.class.is_unimodular() {
            return Err(Error::FormPrecondition("form is not unimodular".into()));
        }
        let e1 = self.evaluate(z1)?;
        let e2 = self.evaluate(z2)?;
        let y = solve(&self.class.gram, &e2)?;
        let dot: BigRational = e1.iter().zip(&y).map(|(a, b)| BigRational::from_integer(a.clone()) * b).sum();
        if !dot.is_integer() {
            return Err(Error::FormPrecondition("non-integral intersection".into()));
        }
        Ok(dot.to_integer())
    }
}

/// Convenience wrapper returning only the classification.
pub fn intersection_form(c: &SimplicialComplex) -> Result<FormClass> {
    Ok(IntersectionForm::compute(c)?.class)
}

/// Cocycle representatives of a basis of `H^2`, which must be torsion-free.
fn h2_generators(c: &SimplicialComplex) -> Result<Vec<Vec<BigInt>>> {
    let delta1 = boundary_matrix(c, 2).transpose();
    let delta2 = boundary_matrix(c, 3).transpose();
    let dec = smith_decomposition(&delta1);
    if dec.form.diagonal.iter().any(|d| !d.is_one()) {
        return Err(Error::FormPrecondition("H^2 has torsion".into()));
    }
    let r = dec.form.rank;
    // Columns of w from r on complete the image of delta1 to a basis.
    let w = dec.u_inv;
    let b = delta2.mul(&w);
    debug_assert!(b.columns_from(0).rows() == 0 || (0..r).all(|j| is_zero_vec(&b.column(j))));
    let tail = b.columns_from(r);
    let k = kernel_basis(&tail);
    let mut out = Vec::with_capacity(k.cols());
    for j in 0..k.cols() {
        let mut y = vec![BigInt::zero(); w.cols()];
        for (i, v) in k.column(j).into_iter().enumerate() {
            y[r + i] = v;
        }
        let z = w.apply(&y);
        debug_assert!(is_zero_vec(&delta2.apply(&z)));
        out.push(z);
    }
    Ok(out)
}

/// Solves `a x = b` over the rationals for square invertible `a`.
fn solve(a: &IntegerMatrix, b: &[BigInt]) -> Result<Vec<BigRational>> {
    let n = a.rows();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = a.row(i).iter().cloned().map(BigRational::from_integer).collect();
            row.push(BigRational::from_integer(b[i].clone()));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::FormPrecondition("singular form".into()))?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= p.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f.clone() * y;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_of_small_forms() {
        let h = FormClass::of_gram(IntegerMatrix::from_rows(&[vec![0i64, 1], vec![1, 0]]));
        assert!(h.is_hyperbolic_plane());
        assert_eq!(h.determinant, BigInt::from(-1));
        let e = FormClass::of_gram(IntegerMatrix::from_rows(&[vec![1i64, 0, 0], vec![0, 1, 0], vec![0, 0, -1]]));
        assert_eq!((e.rank, e.signature, e.parity), (3, 1, Parity::Odd));
        let z = FormClass::of_gram(IntegerMatrix::zeros(0, 0));
        assert_eq!((z.rank, z.signature), (0, 0));
        let degenerate = FormClass::of_gram(IntegerMatrix::from_rows(&[vec![2i64, 0], vec![0, 0]]));
        assert_eq!((degenerate.rank, degenerate.signature), (1, 1));
    }

    #[test]
    fn characteristic_polynomial_of_two_by_two() {
        // x^2 - 5x - 2 for [[1,2],[3,4]]
        let p = characteristic_polynomial(&IntegerMatrix::from_rows(&[vec![1i64, 2], vec![3, 4]]));
        assert_eq!(p, vec![BigInt::from(-2), BigInt::from(-5), BigInt::from(1)]);
    }

    #[test]
    fn four_sphere_has_zero_form() {
        let top = Simplex::parse("012345").unwrap();
        let s4 = SimplicialComplex::from_facets(6, top.boundary_faces()).unwrap();
        let f = intersection_form(&s4).unwrap();
        assert_eq!(f.rank, 0);
    }
}
