use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex universe a [`Simplex`] can address.
pub const MAX_VERTICES: usize = 64;

const DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// Single-character label of a vertex: `0`-`9`, then `a`, `b`, ...
///
/// Vertices beyond the 36 available digits are printed as `[k]`.
pub fn vertex_label(v: u32) -> String {
    match DIGITS.get(v as usize) {
        Some(&c) => (c as char).to_string(),
        None => format!("[{v}]"),
    }
}

pub fn parse_vertex_label(c: char) -> Option<u32> {
    let c = c.to_ascii_lowercase();
    DIGITS.iter().position(|&d| d as char == c).map(|p| p as u32)
}

/// A set of vertices, stored as a bitmask over the universe `0..64`.
///
/// Simplices order lexicographically by their increasing vertex sequence,
/// so `01 < 012 < 02`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn from_mask(mask: u64) -> Self {
        Simplex(mask)
    }

    /// Builds a simplex from vertex ids, rejecting repeats and ids >= 64.
    pub fn new<I: IntoIterator<Item = u32>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v as usize >= MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            let bit = 1u64 << v;
            if mask & bit != 0 {
                return Err(Error::Syntax { line: 0, msg: format!("repeated vertex {}", vertex_label(v)) });
            }
            mask |= bit;
        }
        Ok(Simplex(mask))
    }

    /// Parses a label string such as `01234` or `ab012`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut vs = Vec::with_capacity(s.len());
        for c in s.chars() {
            let v = parse_vertex_label(c).ok_or_else(|| Error::Syntax {
                line: 0,
                msg: format!("bad vertex label {c:?} in {s:?}"),
            })?;
            vs.push(v);
        }
        Simplex::new(vs)
    }

    pub fn vertex(v: u32) -> Self {
        Simplex(1u64 << v)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension, i.e. `len() - 1`. Must not be called on the empty simplex.
    pub fn dim(self) -> usize {
        debug_assert!(!self.is_empty());
        self.len() - 1
    }

    pub fn contains_vertex(self, v: u32) -> bool {
        (v as usize) < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn is_subset_of(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Simplex) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Simplex) -> Simplex {
        Simplex(self.0 | other.0)
    }

    pub fn intersection(self, other: Simplex) -> Simplex {
        Simplex(self.0 & other.0)
    }

    pub fn difference(self, other: Simplex) -> Simplex {
        Simplex(self.0 & !other.0)
    }

    pub fn with_vertex(self, v: u32) -> Simplex {
        Simplex(self.0 | (1u64 << v))
    }

    pub fn without_vertex(self, v: u32) -> Simplex {
        Simplex(self.0 & !(1u64 << v))
    }

    pub fn min_vertex(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max_vertex(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.vertices().collect()
    }

    /// Codimension-one faces, in the order obtained by deleting the i-th vertex.
    pub fn boundary_faces(self) -> impl Iterator<Item = Simplex> {
        self.vertices().map(move |v| self.without_vertex(v))
    }

    /// All non-empty faces (including the simplex itself).
    pub fn faces(self) -> impl Iterator<Item = Simplex> {
        let full = self.0;
        let mut sub = full;
        let mut done = full == 0;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = sub;
            sub = (sub.wrapping_sub(1)) & full;
            if sub == 0 {
                done = true;
            }
            Some(Simplex(out))
        })
    }

    /// Image under a vertex map given as an image table.
    pub fn map(self, images: &[u8]) -> Simplex {
        Simplex(self.vertices().fold(0u64, |m, v| m | (1u64 << images[v as usize])))
    }

    /// Shift every vertex by `k` modulo `n`.
    pub fn shift(self, k: u32, n: u32) -> Simplex {
        Simplex(self.vertices().fold(0u64, |m, v| m | (1u64 << ((v + k) % n))))
    }

    /// Multiply every vertex by `a` modulo `n`.
    pub fn scale(self, a: u32, n: u32) -> Simplex {
        Simplex(self.vertices().fold(0u64, |m, v| m | (1u64 << ((v as u64 * a as u64) % n as u64))))
    }

    pub fn label(self) -> String {
        self.vertices().map(vertex_label).collect()
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The sequences agree below the lowest differing vertex p. The side
        // lacking p is a prefix (smaller) unless it continues past p.
        let p_bit = diff & diff.wrapping_neg();
        let above = !(p_bit | (p_bit - 1));
        let self_has_p = self.0 & p_bit != 0;
        let lacking = if self_has_p { other.0 } else { self.0 };
        match (self_has_p, lacking & above != 0) {
            (true, true) | (false, false) => Ordering::Less,
            (true, false) | (false, true) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.label())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.label())
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Simplex {
        Simplex::parse(x).unwrap()
    }

    #[test]
    fn lexicographic_order() {
        let mut v = [s("02"), s("012"), s("01"), s("1"), s("0"), s("ab"), s("9b")];
        v.sort();
        let labels: Vec<_> = v.iter().map(|x| x.label()).collect();
        assert_eq!(labels, ["0", "01", "012", "02", "1", "9b", "ab"]);
    }

    #[test]
    fn order_matches_vec_order() {
        let masks = [0b1u64, 0b11, 0b101, 0b110, 0b1011, 0b1101, 0b10000, 0b11111];
        for &a in &masks {
            for &b in &masks {
                let (x, y) = (Simplex(a), Simplex(b));
                assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn faces_of_triangle() {
        let t = s("012");
        let mut f: Vec<_> = t.faces().collect();
        f.sort();
        assert_eq!(f.len(), 7);
        assert_eq!(f[0], s("0"));
        assert_eq!(t.boundary_faces().collect::<Vec<_>>(), vec![s("12"), s("02"), s("01")]);
    }

    #[test]
    fn parse_rejects_repeats() {
        assert!(Simplex::parse("011").is_err());
        assert!(Simplex::parse("0x!").is_err());
        assert_eq!(s("ba0").label(), "0ab");
    }
}
