use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};

/// Outcome of greedy collapsing. `collapsible == false` only means the greedy
/// order got stuck, not that the complex is non-collapsible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseResult {
    pub collapsible: bool,
    /// Elementary collapses as `(free face, its unique coface)`.
    pub sequence: Vec<(Simplex, Simplex)>,
    /// Faces left when the greedy run stopped.
    pub remaining: Vec<Simplex>,
}

/// Face set with immediate-coface counts.
struct Working {
    up: BTreeMap<Simplex, usize>,
}

impl Working {
    fn new(faces: impl IntoIterator<Item = Simplex>) -> Self {
        let mut up: BTreeMap<Simplex, usize> = faces.into_iter().map(|f| (f, 0)).collect();
        let keys: Vec<Simplex> = up.keys().copied().collect();
        for f in keys {
            if f.len() > 1 {
                for r in f.boundary_faces() {
                    *up.get_mut(&r).expect("closed under faces") += 1;
                }
            }
        }
        Working { up }
    }

    /// The unique immediate coface of `s`, when `s` is free.
    fn free_coface(&self, s: Simplex) -> Option<Simplex> {
        if self.up.get(&s) != Some(&1) {
            return None;
        }
        let t = self
            .up
            .keys()
            .copied()
            .find(|t| t.len() == s.len() + 1 && s.is_subset_of(*t))
            .expect("count matches");
        (self.up[&t] == 0).then_some(t)
    }

    fn remove(&mut self, s: Simplex) {
        self.up.remove(&s);
        if s.len() > 1 {
            for r in s.boundary_faces() {
                if let Some(k) = self.up.get_mut(&r) {
                    *k -= 1;
                }
            }
        }
    }

    fn apply(&mut self, free: Simplex, coface: Simplex) -> bool {
        if coface.len() != free.len() + 1 || !free.is_subset_of(coface) || self.free_coface(free) != Some(coface) {
            return false;
        }
        self.remove(coface);
        self.remove(free);
        true
    }

    fn is_point(&self) -> bool {
        self.up.len() == 1 && self.up.keys().all(|s| s.len() == 1)
    }
}

/// Greedy collapse, always removing the lexicographically least free face.
pub fn collapse(c: &SimplicialComplex) -> CollapseResult {
    let mut w = Working::new(c.all_faces());
    let mut sequence = Vec::new();
    loop {
        let step = w.up.keys().copied().find_map(|s| w.free_coface(s).map(|t| (s, t)));
        match step {
            Some((s, t)) => {
                w.apply(s, t);
                sequence.push((s, t));
            }
            None => break,
        }
    }
    CollapseResult { collapsible: w.is_point(), sequence, remaining: w.up.keys().copied().collect() }
}

/// Replays a collapse sequence on `c`; true when every step is an
/// elementary collapse and a single vertex remains.
pub fn replay_collapse(c: &SimplicialComplex, sequence: &[(Simplex, Simplex)]) -> bool {
    let mut w = Working::new(c.all_faces());
    sequence.iter().all(|&(s, t)| w.apply(s, t)) && w.is_point()
}
