//! Dense integer matrices and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Panics when the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntegerMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| r.iter().cloned().map(Into::into).collect()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        self.data
            .iter()
            .map(|r| r.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Columns `from..` as a new matrix.
    pub fn columns_from(&self, from: usize) -> IntegerMatrix {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols - from,
            data: self.data.iter().map(|r| r[from..].to_vec()).collect(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.data[i][j].is_zero()))
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.data {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive) and the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// `u * m * v == d` with `u`, `v` unimodular; `u_inv` is the inverse of `u`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub form: SmithForm,
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// Checks `u * m * v == d` and `u * u_inv == 1` by multiplication.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        self.u.mul(m).mul(&self.v) == self.d
            && self.u.mul(&self.u_inv) == IntegerMatrix::identity(self.u.rows)
            && self.d.is_diagonal()
            && self.form.diagonal.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }
}

struct Reducer {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    track: bool,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Reducer {
    fn new(m: &IntegerMatrix, track: bool) -> Self {
        let (u, u_inv, v) = if track {
            (
                IntegerMatrix::identity(m.rows).data,
                IntegerMatrix::identity(m.rows).data,
                IntegerMatrix::identity(m.cols).data,
            )
        } else {
            (Vec::new(), Vec::new(), Vec::new())
        };
        Reducer { a: m.data.clone(), rows: m.rows, cols: m.cols, track, u, u_inv, v }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if self.track {
            self.u.swap(i, j);
            for r in &mut self.u_inv {
                r.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in &mut self.a {
            r.swap(i, j);
        }
        if self.track {
            for r in &mut self.v {
                r.swap(i, j);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let (d, s) = two_mut(&mut self.a, dst, src);
        axpy(d, s, q);
        if self.track {
            let (d, s) = two_mut(&mut self.u, dst, src);
            axpy(d, s, q);
            // u_inv <- u_inv * E^{-1}: column src += q * column dst
            for r in &mut self.u_inv {
                let t = &r[dst] * q;
                if !t.is_zero() {
                    r[src] += t;
                }
            }
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in &mut self.a {
            let t = &r[src] * q;
            if !t.is_zero() {
                r[dst] -= t;
            }
        }
        if self.track {
            for r in &mut self.v {
                let t = &r[src] * q;
                if !t.is_zero() {
                    r[dst] -= t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if self.track {
            for x in &mut self.u[i] {
                *x = -std::mem::take(x);
            }
            for r in &mut self.u_inv {
                r[i] = -std::mem::take(&mut r[i]);
            }
        }
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(mut self) -> (Vec<BigInt>, Reducer) {
        let mut diag = Vec::new();
        let limit = self.rows.min(self.cols);
        let mut t = 0;
        while t < limit {
            let Some((pi, pj)) = self.smallest_in(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&self.a[t][t]);
                    self.sub_row(i, t, &q);
                    if !self.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&self.a[t][t]);
                    self.sub_col(j, t, &q);
                    if !self.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    // Move the smallest remainder in row or column t to the pivot.
                    let mut best = (t, t);
                    for i in t + 1..self.rows {
                        if !self.a[i][t].is_zero() && self.a[i][t].abs() < self.a[best.0][best.1].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..self.cols {
                        if !self.a[t][j].is_zero() && self.a[t][j].abs() < self.a[best.0][best.1].abs() {
                            best = (t, j);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                // Row and column are clear; enforce divisibility of the rest.
                let p = self.a[t][t].clone();
                let offender = (t + 1..self.rows)
                    .find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&p)));
                match offender {
                    Some(i) => {
                        let minus_one = -BigInt::one();
                        self.sub_row(t, i, &minus_one);
                    }
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            diag.push(self.a[t][t].clone());
            t += 1;
        }
        (diag, self)
    }
}

fn two_mut<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &T) {
    assert_ne!(i, j);
    if i < j {
        let (lo, hi) = v.split_at_mut(j);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(i);
        (&mut hi[0], &lo[j])
    }
}

fn axpy(dst: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= s * q;
        }
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (diagonal, _) = Reducer::new(m, false).run();
    SmithForm { rank: diagonal.len(), diagonal }
}

pub fn smith_decomposition(m: &IntegerMatrix) -> SmithDecomposition {
    let (diagonal, r) = Reducer::new(m, true).run();
    let d = IntegerMatrix { rows: r.rows, cols: r.cols, data: r.a };
    SmithDecomposition {
        form: SmithForm { rank: diagonal.len(), diagonal },
        d,
        u: IntegerMatrix { rows: r.rows, cols: r.rows, data: r.u },
        u_inv: IntegerMatrix { rows: r.rows, cols: r.rows, data: r.u_inv },
        v: IntegerMatrix { rows: r.cols, cols: r.cols, data: r.v },
    }
}

/// A basis of the integer kernel `{x : m x = 0}`, as columns.
pub fn kernel_basis(m: &IntegerMatrix) -> IntegerMatrix {
    let dec = smith_decomposition(m);
    dec.v.columns_from(dec.form.rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hand_example() {
        // gcd of entries is 2 and |det| = 8, so the factors are (2, 4).
        let m = IntegerMatrix::from_rows(&[vec![2i64, 4], vec![6, 8]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, big(&[2, 4]));
        let dec = smith_decomposition(&m);
        assert!(dec.verify(&m));
    }

    #[test]
    fn identity_and_zero() {
        let s = smith_normal_form(&IntegerMatrix::identity(3));
        assert_eq!(s.diagonal, big(&[1, 1, 1]));
        let z = smith_normal_form(&IntegerMatrix::zeros(3, 4));
        assert_eq!(z.rank, 0);
        assert!(z.diagonal.is_empty());
    }

    #[test]
    fn divisibility_repair() {
        // diag(2, 3) must become diag(1, 6).
        let m = IntegerMatrix::from_rows(&[vec![2i64, 0], vec![0, 3]]);
        let dec = smith_decomposition(&m);
        assert_eq!(dec.form.diagonal, big(&[1, 6]));
        assert!(dec.verify(&m));
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = IntegerMatrix::from_rows(&[vec![1i64, 2, 3]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }
}
