use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Gap sequence `(y_1, ..., y_{d+1})` of positive residues summing to `n`.
///
/// The cycle generates the orbit of `{x, x+y_1, ..., x+y_1+...+y_d}` under
/// `x -> x+1 mod n`. Values of this type are always stored as the
/// lexicographically least rotation of the gap sequence. Reversal is not
/// applied: the reversed sequence describes the image under `i -> -i`, which
/// is a different orbit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DifferenceCycle {
    entries: Vec<u32>,
    n: u32,
}

impl DifferenceCycle {
    /// Validates and canonicalizes a gap sequence.
    pub fn new(entries: Vec<u32>, n: usize) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::WrongEntryCount { line: 0, expected: 2, found: entries.len() });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e == 0) {
            return Err(Error::NonPositiveEntry { line: 0, value: bad as i64 });
        }
        let sum: u64 = entries.iter().map(|&e| e as u64).sum();
        if sum != n as u64 {
            return Err(Error::SumMismatch { line: 0, sum: sum as i64, n });
        }
        if n > super::MAX_VERTICES {
            return Err(Error::UniverseTooLarge(n));
        }
        Ok(DifferenceCycle { entries: least_rotation(&entries), n: n as u32 })
    }

    /// Difference cycle of the orbit containing `s`.
    pub fn of_simplex(s: Simplex, n: usize) -> Result<Self> {
        let vs = s.to_vec();
        let mut gaps: Vec<u32> = vs.windows(2).map(|w| w[1] - w[0]).collect();
        gaps.push(n as u32 + vs[0] - vs[vs.len() - 1]);
        DifferenceCycle::new(gaps, n)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn modulus(&self) -> usize {
        self.n as usize
    }

    /// Dimension of the generated simplices.
    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    /// Smallest `p > 0` with `entries` invariant under rotation by `p`.
    pub fn period(&self) -> usize {
        let k = self.entries.len();
        (1..=k)
            .find(|&p| k.is_multiple_of(p) && (0..k).all(|i| self.entries[i] == self.entries[(i + p) % k]))
            .unwrap_or(k)
    }

    /// Number of distinct simplices in the orbit: `n` divided by the cyclic
    /// period of the entry sequence.
    pub fn orbit_length(&self) -> usize {
        let per_period: u32 = self.entries[..self.period()].iter().sum();
        per_period as usize
    }

    /// The simplex generated from base vertex `x`.
    pub fn simplex_at(&self, x: u32) -> Simplex {
        let mut v = x % self.n;
        let mut mask = 1u64 << v;
        for &y in &self.entries[..self.entries.len() - 1] {
            v = (v + y) % self.n;
            mask |= 1u64 << v;
        }
        Simplex::from_mask(mask)
    }

    /// Gap sequence read in the opposite direction, i.e. the orbit's image
    /// under the multiplier `-1`.
    pub fn reversed(&self) -> DifferenceCycle {
        let mut e = self.entries.clone();
        e.reverse();
        DifferenceCycle { entries: least_rotation(&e), n: self.n }
    }

    /// Image of the orbit under `i -> a*i mod n`, when that map is a unit.
    pub fn scaled(&self, a: u32) -> Result<DifferenceCycle> {
        if num_integer::gcd(a, self.n) != 1 {
            return Err(Error::InvalidConfig(format!("{a} is not a unit mod {}", self.n)));
        }
        DifferenceCycle::of_simplex(self.simplex_at(0).scale(a, self.n), self.n as usize)
    }

    /// Entries joined by spaces, as in `.dc` files.
    pub fn to_line(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Display for DifferenceCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for DifferenceCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} mod {}", self.n)
    }
}

impl Serialize for DifferenceCycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_line())
    }
}

fn least_rotation(e: &[u32]) -> Vec<u32> {
    let k = e.len();
    (0..k)
        .map(|r| e[r..].iter().chain(&e[..r]).copied().collect::<Vec<u32>>())
        .min()
        .expect("non-empty")
}

/// Least rotation of a raw gap sequence. Rotations only: the reversal is
/// never taken.
pub fn canonicalize(entries: &[u32]) -> Vec<u32> {
    if entries.is_empty() {
        return Vec::new();
    }
    least_rotation(entries)
}

/// All simplices of the orbit, sorted and without repeats.
pub fn expand(cycle: &DifferenceCycle) -> Vec<Simplex> {
    let set: BTreeSet<Simplex> = (0..cycle.n).map(|x| cycle.simplex_at(x)).collect();
    debug_assert_eq!(set.len(), cycle.orbit_length());
    set.into_iter().collect()
}

/// Splits the facets of a cyclically invariant complex into orbits and
/// returns their difference cycles, sorted.
pub fn orbit_decomposition(c: &SimplicialComplex) -> Result<Vec<DifferenceCycle>> {
    if !c.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let set: BTreeSet<DifferenceCycle> =
        c.facets().iter().map(|&f| DifferenceCycle::of_simplex(f, c.n())).collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dc(e: &[u32]) -> DifferenceCycle {
        DifferenceCycle::new(e.to_vec(), 12).unwrap()
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(dc(&[8, 1, 1, 1, 1]).entries(), &[1, 1, 1, 1, 8]);
        assert_eq!(dc(&[3, 2, 3, 2, 2]).entries(), &[2, 2, 3, 2, 3]);
        assert_eq!(canonicalize(&[1, 4, 3, 2, 2]), vec![1, 4, 3, 2, 2]);
        assert_eq!(canonicalize(&[3, 2, 3, 2, 2]), vec![2, 2, 3, 2, 3]);
    }

    #[test]
    fn reversal_is_a_different_orbit() {
        let c = dc(&[1, 4, 3, 2, 2]);
        let r = dc(&[2, 2, 3, 4, 1]);
        assert_eq!(r.entries(), &[1, 2, 2, 3, 4]);
        assert_ne!(c, r);
        let a: BTreeSet<_> = expand(&c).into_iter().collect();
        let b: BTreeSet<_> = expand(&r).into_iter().collect();
        assert!(a.is_disjoint(&b));
        assert_eq!(c.reversed(), r);
        assert_eq!(c.scaled(11).unwrap(), r);
    }

    #[test]
    fn base_facet_and_orbit_length() {
        let c = dc(&[1, 1, 1, 1, 8]);
        assert_eq!(c.simplex_at(0), Simplex::parse("01234").unwrap());
        assert_eq!(expand(&c).len(), 12);
        let half = DifferenceCycle::new(vec![6, 6], 12).unwrap();
        assert_eq!(half.period(), 1);
        let edges = expand(&half);
        assert_eq!(edges.len(), 6);
        assert!(edges.iter().all(|e| {
            let v = e.to_vec();
            v[1] - v[0] == 6
        }));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(DifferenceCycle::new(vec![1, 1, 1, 1, 7], 12), Err(Error::SumMismatch { sum: 11, .. })));
        assert!(matches!(DifferenceCycle::new(vec![0, 1, 1, 2, 8], 12), Err(Error::NonPositiveEntry { .. })));
    }

    #[test]
    fn of_simplex_recovers_cycle() {
        let c = dc(&[1, 3, 1, 3, 4]);
        for f in expand(&c) {
            assert_eq!(DifferenceCycle::of_simplex(f, 12).unwrap(), c);
        }
    }
}
