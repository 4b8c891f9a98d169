use std::fmt;

use serde::{Serialize, Serializer};

use crate::complex::{parse_vertex_label, vertex_label};
use crate::error::{Error, Result};

/// A permutation of `0..n` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::InvalidPermutation(format!("image {i} out of range")))?;
            if *slot {
                return Err(Error::InvalidPermutation(format!("image {i} repeated")));
            }
            *slot = true;
        }
        Ok(Permutation(images))
    }

    /// `i -> a * i mod n`.
    pub fn multiplier(a: u32, n: usize) -> Result<Self> {
        Self::from_images((0..n as u32).map(|i| ((a * i) % n as u32) as u8).collect())
    }

    /// `i -> i + k mod n`.
    pub fn shift(k: u32, n: usize) -> Self {
        Permutation((0..n as u32).map(|i| ((i + k) % n as u32) as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.0[v as usize] as u32
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }

    pub fn power(&self, k: usize) -> Permutation {
        (0..k).fold(Permutation::identity(self.degree()), |acc, _| acc.then(self))
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &j)| *i == j as usize).count()
    }

    /// Non-trivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32);
                x = self.0[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Parses disjoint-cycle notation such as `(1,5)(2,a)(4,8)(7,b)`; `()`
    /// is the identity.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut seen = vec![false; n];
        let bad = |msg: &str| Error::InvalidPermutation(format!("{msg} in {s:?}"));
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let end = body.find(')').ok_or_else(|| bad("missing ')'"))?;
            let pts: Vec<u32> = body[..end]
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    let mut cs = t.chars();
                    match (cs.next().and_then(parse_vertex_label), cs.next()) {
                        (Some(v), None) if (v as usize) < n => Ok(v),
                        _ => Err(bad("bad point")),
                    }
                })
                .collect::<Result<_>>()?;
            for (i, &p) in pts.iter().enumerate() {
                if std::mem::replace(&mut seen[p as usize], true) {
                    return Err(bad("repeated point"));
                }
                images[p as usize] = pts[(i + 1) % pts.len()] as u8;
            }
            rest = body[end + 1..].trim_start();
        }
        Ok(Permutation(images))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let labels: Vec<String> = c.iter().map(|&v| vertex_label(v)).collect();
            write!(f, "({})", labels.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
