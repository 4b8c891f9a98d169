//! Search for unions of cyclic facet orbits.
//!
//! The search picks `orbit_count` distinct canonical difference cycles in
//! strictly increasing order, adding each cycle's full C_n-orbit at once.
//! With the `ridge_degree_2` filter active a branch is cut as soon as some
//! ridge lies in three facets, or when the ridges still lying in a single
//! facet can no longer be completed by the cycles left in the pool.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::io::{write_cycles, CycleHeader};
use crate::complex::{check_dehn_sommerville, expand, DifferenceCycle, Simplex, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    /// Every ridge lies in exactly two facets.
    RidgeDegree2,
    /// For every edge, the link has the Euler characteristic of a
    /// `(d-2)`-sphere (2 when `d = 4`).
    EdgeLinkEuler,
    /// Every vertex pair outside the orbit of the required diagonal is an edge.
    VertexDegreeComplete,
    /// Both Dehn-Sommerville relations for 4-manifolds hold.
    DehnSommerville,
}

impl Filter {
    pub const ALL: [Filter; 4] =
        [Filter::RidgeDegree2, Filter::EdgeLinkEuler, Filter::VertexDegreeComplete, Filter::DehnSommerville];

    pub fn short_name(self) -> &'static str {
        match self {
            Filter::RidgeDegree2 => "ridge",
            Filter::EdgeLinkEuler => "edgelink",
            Filter::VertexDegreeComplete => "degree",
            Filter::DehnSommerville => "ds",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ridge" | "ridge_degree_2" => Ok(Filter::RidgeDegree2),
            "edgelink" | "edge_link_euler" => Ok(Filter::EdgeLinkEuler),
            "degree" | "vertex_degree_complete" => Ok(Filter::VertexDegreeComplete),
            "ds" | "dehn_sommerville" => Ok(Filter::DehnSommerville),
            other => Err(Error::InvalidConfig(format!("unknown filter {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub d: usize,
    pub orbit_count: usize,
    pub required_diagonal: Option<(u32, u32)>,
    pub filters: BTreeSet<Filter>,
    /// Worker threads for top-level branches; 1 runs on the calling thread.
    pub parallelism: usize,
}

impl SearchConfig {
    pub fn new(n: usize, d: usize, orbit_count: usize) -> Self {
        SearchConfig {
            n,
            d,
            orbit_count,
            required_diagonal: None,
            filters: BTreeSet::new(),
            parallelism: 1,
        }
    }

    pub fn with_diagonal(mut self, a: u32, b: u32) -> Self {
        self.required_diagonal = Some((a.min(b), a.max(b)));
        self
    }

    pub fn with_filters<I: IntoIterator<Item = Filter>>(mut self, fs: I) -> Self {
        self.filters.extend(fs);
        self
    }

    pub fn with_parallelism(mut self, p: usize) -> Self {
        self.parallelism = p;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.orbit_count == 0 {
            return Err(Error::InvalidConfig("orbit_count must be at least 1".into()));
        }
        if self.d == 0 || self.n <= self.d {
            return Err(Error::InvalidConfig(format!("need n > d >= 1, got n={} d={}", self.n, self.d)));
        }
        if self.n > crate::complex::MAX_VERTICES {
            return Err(Error::UniverseTooLarge(self.n));
        }
        if let Some((a, b)) = self.required_diagonal {
            if a as usize >= self.n || b as usize >= self.n || a == b {
                return Err(Error::InvalidConfig(format!("bad diagonal ({a},{b}) for n={}", self.n)));
            }
        }
        if self.filters.contains(&Filter::DehnSommerville) && self.d != 4 {
            return Err(Error::InvalidConfig("the dehn_sommerville filter needs d = 4".into()));
        }
        if self.parallelism == 0 {
            return Err(Error::InvalidConfig("parallelism must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub cycles: Vec<DifferenceCycle>,
    pub complex: SimplicialComplex,
    /// Outcome of every filter, whether or not it was requested.
    pub filter_trace: BTreeMap<Filter, bool>,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cycles == other.cycles
    }
}

impl Candidate {
    fn from_cycles(cycles: Vec<DifferenceCycle>, cfg: &SearchConfig) -> Self {
        let complex = SimplicialComplex::from_cycles(&cycles).expect("pool cycles are valid");
        let filter_trace = Filter::ALL.iter().map(|&f| (f, evaluate_filter(f, &complex, cfg))).collect();
        Candidate { cycles, complex, filter_trace }
    }

    pub fn passes(&self, filters: &BTreeSet<Filter>) -> bool {
        filters.iter().all(|f| self.filter_trace[f])
    }

    /// The candidate as a `.dc` block followed by a filter-trace comment.
    pub fn render(&self, index: usize, cfg: &SearchConfig) -> String {
        let mut s = format!("# candidate {index}\n");
        s.push_str(&write_cycles(CycleHeader { n: cfg.n, d: cfg.d }, &self.cycles));
        let trace: Vec<String> = self
            .filter_trace
            .iter()
            .map(|(f, ok)| format!("{f}={}", if *ok { "pass" } else { "fail" }))
            .collect();
        s.push_str(&format!("# filters: {}\n", trace.join(" ")));
        s
    }
}

/// All canonical difference cycles of `d`-simplices mod `n`, sorted.
pub fn generate_cycle_pool(n: usize, d: usize) -> Vec<DifferenceCycle> {
    let parts = d + 1;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(parts);
    compositions(n as u32, parts, &mut buf, &mut |entries| {
        if crate::complex::canonicalize(entries) == entries {
            out.push(DifferenceCycle::new(entries.to_vec(), n).expect("valid composition"));
        }
    });
    out
}

fn compositions(rest: u32, parts: usize, buf: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if parts == 1 {
        if rest >= 1 {
            buf.push(rest);
            emit(buf);
            buf.pop();
        }
        return;
    }
    for first in 1..=rest.saturating_sub(parts as u32 - 1) {
        buf.push(first);
        compositions(rest - first, parts - 1, buf, emit);
        buf.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudomanifoldCheck {
    pub closed: bool,
    pub strongly_connected: bool,
    /// Ridges whose facet degree differs from two, with that degree.
    pub bad_ridges: Vec<(Simplex, usize)>,
}

/// Ridge degrees and dual-graph connectivity of a pure complex.
pub fn check_pseudomanifold(c: &SimplicialComplex) -> PseudomanifoldCheck {
    let Some(d) = c.dim() else {
        return PseudomanifoldCheck { closed: true, strongly_connected: true, bad_ridges: Vec::new() };
    };
    if d == 0 {
        let k = c.facets().len();
        return PseudomanifoldCheck { closed: k == 2, strongly_connected: k == 1, bad_ridges: Vec::new() };
    }
    let mut ridge_facets: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (i, f) in c.facets().iter().enumerate() {
        for r in f.boundary_faces() {
            ridge_facets.entry(r).or_default().push(i);
        }
    }
    let bad_ridges: Vec<(Simplex, usize)> =
        ridge_facets.iter().filter(|(_, fs)| fs.len() != 2).map(|(r, fs)| (*r, fs.len())).collect();

    let k = c.facets().len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for fs in ridge_facets.values() {
        for w in fs.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let roots: BTreeSet<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
    PseudomanifoldCheck { closed: bad_ridges.is_empty(), strongly_connected: roots.len() == 1, bad_ridges }
}

/// Euler characteristic of every edge link, computed from face counts.
pub fn edge_link_euler_characteristics(c: &SimplicialComplex) -> BTreeMap<Simplex, i64> {
    let mut chi: BTreeMap<Simplex, i64> = c.edges().iter().map(|&e| (e, 0)).collect();
    for k in 2..=c.dim().unwrap_or(0) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for f in c.faces(k) {
            let vs = f.to_vec();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let e = Simplex::vertex(vs[i]).with_vertex(vs[j]);
                    *chi.get_mut(&e).expect("edge of a face") += sign;
                }
            }
        }
    }
    chi
}

fn evaluate_filter(f: Filter, c: &SimplicialComplex, cfg: &SearchConfig) -> bool {
    match f {
        Filter::RidgeDegree2 => check_pseudomanifold(c).closed,
        Filter::EdgeLinkEuler => {
            let target = if cfg.d.is_multiple_of(2) { 2 } else { 0 };
            edge_link_euler_characteristics(c).values().all(|&x| x == target)
        }
        Filter::VertexDegreeComplete => {
            let n = cfg.n as u32;
            let excluded = |e: Simplex| match cfg.required_diagonal {
                Some((a, b)) => {
                    let v = e.to_vec();
                    let diff = (v[1] + n - v[0]) % n;
                    let want = (b + n - a) % n;
                    diff == want || diff == (n - want) % n
                }
                None => false,
            };
            c.diagonals().into_iter().all(excluded)
        }
        Filter::DehnSommerville => {
            let fv = c.f_vector();
            fv.0.len() == 5 && check_dehn_sommerville(&fv).map(|r| r.ds1 && r.ds2).unwrap_or(false)
        }
    }
}

struct Pool {
    cycles: Vec<DifferenceCycle>,
    /// Ridge indices touched by each cycle's orbit, with repeats.
    ridges: Vec<Vec<u32>>,
    /// Largest pool index whose orbit contains the ridge.
    last_cover: Vec<usize>,
    ridge_count: usize,
}

impl Pool {
    fn new(cfg: &SearchConfig) -> Self {
        let n = cfg.n as u32;
        let cycles: Vec<DifferenceCycle> = generate_cycle_pool(cfg.n, cfg.d)
            .into_iter()
            .filter(|c| match cfg.required_diagonal {
                Some((a, b)) => {
                    let diag = Simplex::vertex(a).with_vertex(b);
                    (0..n).all(|x| !diag.is_subset_of(c.simplex_at(x)))
                }
                None => true,
            })
            .collect();
        let mut index: HashMap<Simplex, u32> = HashMap::new();
        let mut ridges = Vec::with_capacity(cycles.len());
        for c in &cycles {
            let mut rs = Vec::new();
            for f in expand(c) {
                for r in f.boundary_faces() {
                    let next = index.len() as u32;
                    rs.push(*index.entry(r).or_insert(next));
                }
            }
            ridges.push(rs);
        }
        let ridge_count = index.len();
        let mut last_cover = vec![0usize; ridge_count];
        for (i, rs) in ridges.iter().enumerate() {
            for &r in rs {
                last_cover[r as usize] = i;
            }
        }
        Pool { cycles, ridges, last_cover, ridge_count }
    }
}

struct Search<'a> {
    pool: &'a Pool,
    cfg: &'a SearchConfig,
    prune: bool,
    counts: Vec<u8>,
    chosen: Vec<usize>,
    hits: Vec<Candidate>,
}

impl<'a> Search<'a> {
    fn new(pool: &'a Pool, cfg: &'a SearchConfig) -> Self {
        Search {
            pool,
            cfg,
            prune: cfg.filters.contains(&Filter::RidgeDegree2),
            counts: vec![0; pool.ridge_count],
            chosen: Vec::with_capacity(cfg.orbit_count),
            hits: Vec::new(),
        }
    }

    /// Adds cycle `i`; returns false (and leaves the state unchanged) when a
    /// ridge would exceed degree two under pruning.
    fn push(&mut self, i: usize) -> bool {
        let rs = &self.pool.ridges[i];
        for &r in rs {
            self.counts[r as usize] += 1;
        }
        if self.prune && rs.iter().any(|&r| self.counts[r as usize] > 2) {
            for &r in rs {
                self.counts[r as usize] -= 1;
            }
            return false;
        }
        self.chosen.push(i);
        true
    }

    fn pop(&mut self) {
        let i = self.chosen.pop().expect("non-empty");
        for &r in &self.pool.ridges[i] {
            self.counts[r as usize] -= 1;
        }
    }

    /// Whether every ridge of degree one can still be completed.
    fn completable(&self, last: usize) -> bool {
        let remaining = self.cfg.orbit_count - self.chosen.len();
        let per_cycle = self.pool.ridges.first().map(Vec::len).unwrap_or(0);
        let mut open = 0usize;
        for (r, &k) in self.counts.iter().enumerate() {
            if k == 1 {
                if self.pool.last_cover[r] <= last {
                    return false;
                }
                open += 1;
            }
        }
        open <= remaining * per_cycle
    }

    fn run(&mut self, start: usize) {
        if self.chosen.len() == self.cfg.orbit_count {
            let cycles: Vec<DifferenceCycle> = self.chosen.iter().map(|&i| self.pool.cycles[i].clone()).collect();
            let cand = Candidate::from_cycles(cycles, self.cfg);
            if cand.passes(&self.cfg.filters) {
                self.hits.push(cand);
            }
            return;
        }
        let remaining = self.cfg.orbit_count - self.chosen.len();
        let pool_len = self.pool.cycles.len();
        for i in start..pool_len {
            if pool_len - i < remaining {
                break;
            }
            if !self.push(i) {
                continue;
            }
            if !self.prune || self.chosen.len() == self.cfg.orbit_count || self.completable(i) {
                self.run(i + 1);
            }
            self.pop();
        }
    }
}

/// Runs the search. Output is sorted by cycle list and does not depend on
/// `cfg.parallelism`.
pub fn enumerate(cfg: &SearchConfig) -> Result<Vec<Candidate>> {
    cfg.validate()?;
    let pool = Pool::new(cfg);
    enumerate_pool(&pool, cfg)
}

fn enumerate_pool(pool: &Pool, cfg: &SearchConfig) -> Result<Vec<Candidate>> {
    let branch = |first: usize| -> Vec<Candidate> {
        let mut s = Search::new(pool, cfg);
        if s.push(first) {
            if !s.prune || cfg.orbit_count == 1 || s.completable(first) {
                s.run(first + 1);
            }
            s.pop();
        }
        s.hits
    };
    let firsts: Vec<usize> = (0..pool.cycles.len()).collect();
    let mut hits: Vec<Candidate> = if cfg.parallelism <= 1 {
        firsts.into_iter().flat_map(branch).collect()
    } else {
        let tp = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.parallelism)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        tp.install(|| firsts.into_par_iter().flat_map_iter(branch).collect())
    };
    hits.sort_by(|a, b| a.cycles.cmp(&b.cycles));
    Ok(hits)
}

/// Exhaustive reference search without pruning over an explicit pool;
/// filters are applied only to complete selections.
pub fn enumerate_unpruned(cfg: &SearchConfig, pool: &[DifferenceCycle]) -> Vec<Candidate> {
    let mut pool: Vec<DifferenceCycle> = pool.to_vec();
    pool.sort();
    pool.dedup();
    let mut out = Vec::new();
    let k = cfg.orbit_count;
    let mut idx: Vec<usize> = (0..k).collect();
    if k > pool.len() {
        return out;
    }
    loop {
        let cycles: Vec<DifferenceCycle> = idx.iter().map(|&i| pool[i].clone()).collect();
        let ok_diag = match cfg.required_diagonal {
            Some((a, b)) => {
                let diag = Simplex::vertex(a).with_vertex(b);
                cycles.iter().all(|c| expand(c).iter().all(|f| !diag.is_subset_of(*f)))
            }
            None => true,
        };
        if ok_diag {
            let cand = Candidate::from_cycles(cycles, cfg);
            if cand.passes(&cfg.filters) {
                out.push(cand);
            }
        }
        // next k-combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < pool.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Renders a candidate list as consecutive `.dc` blocks.
pub fn render_candidates(cands: &[Candidate], cfg: &SearchConfig) -> String {
    let mut s = format!("# {} candidate(s)\n", cands.len());
    for (i, c) in cands.iter().enumerate() {
        s.push('\n');
        s.push_str(&c.render(i + 1, cfg));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    #[test]
    fn pool_of_five_cycles_mod_twelve() {
        // Oracle: 330 compositions of 12 into 5 parts, rotation acts freely.
        let mut raw = 0;
        for a in 1..12u32 {
            for b in 1..12 {
                for c in 1..12 {
                    for d in 1..12 {
                        if a + b + c + d < 12 {
                            raw += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(raw, 330);
        let pool = generate_cycle_pool(12, 4);
        assert_eq!(pool.len(), raw / 5);
        assert!(pool.windows(2).all(|w| w[0] < w[1]));
        assert!(pool.iter().any(|c| c.entries() == [1, 1, 1, 1, 8]));
        assert!(pool.iter().all(|c| c.entries().iter().sum::<u32>() == 12));
        assert!(pool.iter().all(|c| expand(c).len() == 12));
    }

    #[test]
    fn pseudomanifold_checks() {
        let single = SimplicialComplex::from_facets(5, [Simplex::parse("01234").unwrap()]).unwrap();
        let r = check_pseudomanifold(&single);
        assert!(!r.closed);
        assert_eq!(r.bad_ridges.len(), 5);
        assert!(r.bad_ridges.iter().all(|(_, k)| *k == 1));
        let m1 = check_pseudomanifold(&bundled::candidate(1));
        assert!(m1.closed && m1.strongly_connected);
    }

    #[test]
    fn config_validation() {
        assert!(SearchConfig::new(12, 4, 0).validate().is_err());
        assert!(SearchConfig::new(12, 3, 2).with_filters([Filter::DehnSommerville]).validate().is_err());
        assert!(SearchConfig::new(12, 4, 2).with_diagonal(0, 12).validate().is_err());
        assert!(SearchConfig::new(12, 4, 6).with_diagonal(0, 6).validate().is_ok());
    }

    #[test]
    fn filter_names_parse() {
        for f in Filter::ALL {
            assert_eq!(f.short_name().parse::<Filter>().unwrap(), f);
        }
        assert!("bogus".parse::<Filter>().is_err());
    }
}
