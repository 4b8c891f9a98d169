//! Bistellar reduction of closed pseudomanifolds.
//!
//! A move is a pair `(A, B)` of disjoint simplices with `dim A + dim B = d`
//! such that `lk(A) = ∂B` and `B` is not a face: the star `A * ∂B` is
//! replaced by `∂A * B`. Moves with `dim A < dim B` lower the facet count.
//! Moves that would add a vertex are never used, so the vertex labels of the
//! input are all that ever appear.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::Simplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flip {
    pub a: Simplex,
    pub b: Simplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BistellarConfig {
    /// Total number of flips over all restarts.
    pub budget: usize,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for BistellarConfig {
    fn default() -> Self {
        BistellarConfig { budget: 5000, restarts: 4, seed: 0 }
    }
}

/// A facet list under bistellar moves.
#[derive(Clone, Debug)]
pub struct FlipState {
    d: usize,
    facets: BTreeSet<Simplex>,
}

impl FlipState {
    pub fn new(d: usize, facets: impl IntoIterator<Item = Simplex>) -> Self {
        FlipState { d, facets: facets.into_iter().collect() }
    }

    pub fn facets(&self) -> &BTreeSet<Simplex> {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.facets.iter().fold(Simplex::EMPTY, |acc, f| acc.union(*f)).len()
    }

    /// Boundary of a `(d+1)`-simplex.
    pub fn is_simplex_boundary(&self) -> bool {
        self.facets.len() == self.d + 2 && self.vertex_count() == self.d + 2
    }

    fn contains_face(&self, s: Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset_of(*f))
    }

    /// Checks the move preconditions.
    pub fn is_valid(&self, flip: Flip) -> bool {
        let (a, b) = (flip.a, flip.b);
        if a.is_empty() || b.is_empty() || !a.is_disjoint(b) || a.len() + b.len() != self.d + 2 || a.len() > self.d {
            return false;
        }
        let star: Vec<Simplex> = self.facets.iter().copied().filter(|f| a.is_subset_of(*f)).collect();
        star.len() == b.len()
            && star.iter().all(|f| f.difference(a).is_subset_of(b))
            && !self.contains_face(b)
    }

    pub fn apply(&mut self, flip: Flip) -> bool {
        if !self.is_valid(flip) {
            return false;
        }
        for v in flip.b.vertices() {
            self.facets.remove(&flip.a.union(flip.b.without_vertex(v)));
        }
        for u in flip.a.vertices() {
            self.facets.insert(flip.b.union(flip.a.without_vertex(u)));
        }
        true
    }

    /// All valid moves, grouped by `dim A`.
    fn moves(&self) -> Vec<Vec<Flip>> {
        let mut star: HashMap<Simplex, Vec<Simplex>> = HashMap::new();
        for &f in &self.facets {
            for s in f.faces() {
                if s.len() <= self.d {
                    star.entry(s).or_default().push(f);
                }
            }
        }
        let mut out = vec![Vec::new(); self.d];
        let mut keys: Vec<&Simplex> = star.keys().collect();
        keys.sort();
        for a in keys {
            let fs = &star[a];
            let want = self.d + 2 - a.len();
            if fs.len() != want {
                continue;
            }
            let b = fs.iter().fold(Simplex::EMPTY, |acc, f| acc.union(f.difference(*a)));
            if b.len() != want || self.contains_face(b) {
                continue;
            }
            out[a.dim()].push(Flip { a: *a, b });
        }
        out
    }
}

/// Replays flips on `facets`; true when all are valid and the result is the
/// boundary of a simplex.
pub fn replay_flips(d: usize, facets: &[Simplex], flips: &[Flip]) -> bool {
    let mut st = FlipState::new(d, facets.iter().copied());
    flips.iter().all(|&f| st.apply(f)) && st.is_simplex_boundary()
}

/// Searches for a flip sequence to the boundary of a simplex. `None` when the
/// budget runs out.
pub fn reduce_to_simplex_boundary(d: usize, facets: &[Simplex], cfg: &BistellarConfig) -> Option<Vec<Flip>> {
    if d == 0 {
        return (facets.len() == 2).then(Vec::new);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let per_run = (cfg.budget / cfg.restarts.max(1)).max(1);
    let mut spent = 0;
    while spent < cfg.budget {
        let run_budget = per_run.min(cfg.budget - spent);
        let (found, used) = attempt(d, facets, run_budget, &mut rng);
        spent += used.max(1);
        if found.is_some() {
            return found;
        }
    }
    None
}

fn attempt(d: usize, facets: &[Simplex], budget: usize, rng: &mut ChaCha8Rng) -> (Option<Vec<Flip>>, usize) {
    let mut st = FlipState::new(d, facets.iter().copied());
    let mut path = Vec::new();
    let mut tabu: VecDeque<Simplex> = VecDeque::new();
    let mut heat = 0usize;
    let mut used = 0;
    while used < budget {
        if st.is_simplex_boundary() {
            return (Some(path), used);
        }
        let moves = st.moves();
        // Reducing moves first, smallest A first, skipping tabu ones.
        let reducing = (0..d)
            .filter(|&i| 2 * i < d)
            .map(|i| moves[i].iter().copied().filter(|m| !tabu.contains(&m.a)).collect::<Vec<_>>())
            .find(|ms| !ms.is_empty());
        let flip = match reducing {
            Some(ms) if heat == 0 => *ms.choose(rng).expect("non-empty"),
            _ => {
                let ups: Vec<Flip> = (0..d).filter(|&i| 2 * i >= d).flat_map(|i| moves[i].iter().copied()).collect();
                if ups.is_empty() {
                    return (None, used.max(1));
                }
                // Stuck: climb a few extra steps before reducing again.
                heat = if heat == 0 { rng.gen_range(0..=d) } else { heat - 1 };
                let m = *ups.choose(rng).expect("non-empty");
                tabu.push_back(m.b);
                if tabu.len() > 2 * d {
                    tabu.pop_front();
                }
                m
            }
        };
        st.apply(flip);
        path.push(flip);
        used += 1;
    }
    (None, used)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex_boundary(k: u32) -> Vec<Simplex> {
        Simplex::new(0..k).unwrap().boundary_faces().collect()
    }

    #[test]
    fn boundary_needs_no_flips() {
        let fs = simplex_boundary(5);
        assert_eq!(reduce_to_simplex_boundary(3, &fs, &BistellarConfig::default()), Some(Vec::new()));
        assert!(replay_flips(3, &fs, &[]));
    }

    #[test]
    fn subdivided_boundary_reduces() {
        // Stellar subdivision of one facet of the 4-simplex boundary.
        let mut fs = simplex_boundary(5);
        let t = fs.remove(0);
        fs.extend(t.boundary_faces().map(|r| r.with_vertex(5)));
        let flips = reduce_to_simplex_boundary(3, &fs, &BistellarConfig::default()).unwrap();
        assert!(replay_flips(3, &fs, &flips));
        assert_eq!(flips.len(), 1);
    }

    #[test]
    fn invalid_flip_is_rejected() {
        let fs = simplex_boundary(5);
        let mut st = FlipState::new(3, fs);
        let bogus = Flip { a: Simplex::vertex(0), b: Simplex::new([1, 2, 3, 4]).unwrap() };
        assert!(!st.apply(bogus));
    }
}
