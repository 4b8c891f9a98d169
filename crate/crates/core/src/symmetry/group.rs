//! Finite permutation groups small enough to list.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::perm::Permutation;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Default cap on the number of listed elements.
pub const MATERIALIZATION_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Sorted list of all elements.
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    /// Closes `generators` under composition; fails beyond `cap` elements.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!("{g} has degree {}, expected {degree}", g.degree())));
        }
        let elements = closure(degree, &generators, cap)?;
        Ok(PermutationGroup { degree, generators, elements })
    }

    /// A group from a complete element list, with a greedy generating set.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let generators = greedy_generators(degree, &elements);
        PermutationGroup { degree, generators, elements }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_elements(degree, vec![Permutation::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn orbit(&self, v: u32) -> BTreeSet<u32> {
        self.elements.iter().map(|g| g.apply(v)).collect()
    }
}

fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::GroupTooLarge { order: seen.len(), cap });
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Walks the sorted elements, keeping each one not yet generated.
fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens = Vec::new();
    let mut current: BTreeSet<Permutation> = [Permutation::identity(degree)].into_iter().collect();
    for e in elements {
        if current.len() == elements.len() {
            break;
        }
        if !current.contains(e) {
            gens.push(e.clone());
            current = closure(degree, &gens, elements.len()).expect("inside the group").into_iter().collect();
        }
    }
    gens
}

/// Multiplication table over the element list of a group.
pub struct Table {
    elements: Vec<Permutation>,
    mul: Vec<Vec<u16>>,
    inv: Vec<u16>,
    identity: usize,
}

/// A subgroup as sorted element indices into a [`Table`].
pub type Subset = Vec<usize>;

impl Table {
    pub fn new(g: &PermutationGroup) -> Self {
        let elements = g.elements.clone();
        let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.then(b)] as u16).collect())
            .collect();
        let inv = elements.iter().map(|a| index[&a.inverse()] as u16).collect();
        let identity = index[&Permutation::identity(g.degree)];
        Table { elements, mul, inv, identity }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn all(&self) -> Subset {
        (0..self.len()).collect()
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    fn conj(&self, x: usize, g: usize) -> usize {
        self.m(self.m(self.inv(g), x), g)
    }

    fn commutator(&self, a: usize, b: usize) -> usize {
        self.m(self.m(self.inv(a), self.inv(b)), self.m(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.m(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`; `None` once it exceeds `cap` elements.
    pub fn generated(&self, gens: &[usize], cap: usize) -> Option<Subset> {
        let mut inside = vec![false; self.len()];
        inside[self.identity] = true;
        let mut list = vec![self.identity];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.m(x, g);
                if !inside[y] {
                    inside[y] = true;
                    list.push(y);
                    if list.len() > cap {
                        return None;
                    }
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Some(list)
    }

    pub fn center(&self, h: &[usize]) -> Subset {
        h.iter().copied().filter(|&z| h.iter().all(|&x| self.m(z, x) == self.m(x, z))).collect()
    }

    pub fn derived(&self, h: &[usize]) -> Subset {
        let comms: BTreeSet<usize> = h.iter().flat_map(|&a| h.iter().map(move |&b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        let comms: Vec<usize> = comms.into_iter().collect();
        self.generated(&comms, usize::MAX).expect("no cap")
    }

    /// Conjugacy classes of `h` under conjugation by `h`.
    pub fn conjugacy_classes(&self, h: &[usize]) -> Vec<Subset> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for &x in h {
            if seen[x] {
                continue;
            }
            let class: BTreeSet<usize> = h.iter().map(|&g| self.conj(x, g)).collect();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class.into_iter().collect());
        }
        out
    }

    /// All normal subgroups of `h`, sorted by order then elements.
    pub fn normal_subgroups(&self, h: &[usize]) -> Vec<Subset> {
        let classes = self.conjugacy_classes(h);
        let mut found: BTreeSet<Subset> = BTreeSet::new();
        found.insert(vec![self.identity]);
        for c in &classes {
            found.insert(self.generated(c, usize::MAX).expect("no cap"));
        }
        // Joins of normal subgroups are normal; close under joins.
        loop {
            let list: Vec<Subset> = found.iter().cloned().collect();
            let mut grew = false;
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    let mut gens = list[i].clone();
                    gens.extend(&list[j]);
                    let join = self.generated(&gens, usize::MAX).expect("no cap");
                    grew |= found.insert(join);
                }
            }
            if !grew {
                break;
            }
        }
        let mut out: Vec<Subset> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Invariant factors of `h / [h, h]`, ascending, without ones.
    pub fn abelianization(&self, h: &[usize]) -> Vec<u64> {
        let d = self.derived(h);
        let mut in_d = vec![false; self.len()];
        for &x in &d {
            in_d[x] = true;
        }
        let q = (h.len() / d.len()) as u64;
        // n(k) = #{cosets x with x^k in d}
        let count = |k: u64| -> u64 {
            let hits = h
                .iter()
                .filter(|&&x| {
                    let mut y = self.identity;
                    for _ in 0..k {
                        y = self.m(y, x);
                    }
                    in_d[y]
                })
                .count();
            (hits / d.len()) as u64
        };
        invariant_factors(q, count)
    }

    pub fn is_cyclic(&self, h: &[usize]) -> bool {
        h.iter().any(|&x| self.element_order(x) == h.len())
    }

    fn is_abelian(&self, h: &[usize]) -> bool {
        self.center(h).len() == h.len()
    }

    /// Invariant factors of an abelian subgroup.
    pub fn abelian_invariants(&self, h: &[usize]) -> Option<Vec<u64>> {
        if !self.is_abelian(h) {
            return None;
        }
        let count = |k: u64| -> u64 {
            h.iter()
                .filter(|&&x| {
                    let mut y = self.identity;
                    for _ in 0..k {
                        y = self.m(y, x);
                    }
                    y == self.identity
                })
                .count() as u64
        };
        Some(invariant_factors(h.len() as u64, count))
    }

    /// Subgroups of order `order` meeting `n` trivially, generated by one or
    /// two elements; one representative per isomorphism signature.
    pub fn complements(&self, g: &[usize], n: &[usize]) -> Vec<Subset> {
        let target = g.len() / n.len();
        let mut in_n = vec![false; self.len()];
        for &x in n {
            in_n[x] = true;
        }
        let trivial_meet = |s: &Subset| s.iter().all(|&x| x == self.identity || !in_n[x]);
        let mut out: Vec<Subset> = Vec::new();
        let mut signatures: BTreeSet<(bool, Option<Vec<u64>>)> = BTreeSet::new();
        let mut consider = |s: Subset, out: &mut Vec<Subset>| {
            if s.len() == target && trivial_meet(&s) {
                let sig = (self.is_cyclic(&s), self.abelian_invariants(&s));
                if signatures.insert(sig) {
                    out.push(s);
                }
            }
        };
        let candidates: Vec<usize> =
            g.iter().copied().filter(|&x| !in_n[x] && target.is_multiple_of(self.element_order(x))).collect();
        for &x in &candidates {
            if let Some(s) = self.generated(&[x], target) {
                consider(s, &mut out);
            }
        }
        for (i, &x) in candidates.iter().enumerate() {
            for &y in &candidates[i + 1..] {
                if let Some(s) = self.generated(&[x, y], target) {
                    consider(s, &mut out);
                }
            }
        }
        out
    }
}

/// Invariant factors of a finite abelian group of order `order`, given
/// `count(k) = #{x : x^k = 1}`.
fn invariant_factors(order: u64, count: impl Fn(u64) -> u64) -> Vec<u64> {
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    let mut rest = order;
    let mut p = 2;
    while rest > 1 {
        if !rest.is_multiple_of(p) {
            p += 1;
            continue;
        }
        let mut a = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            a += 1;
        }
        // c[j] = number of cyclic p-factors of exponent >= j
        let log = |x: u64| -> u32 {
            let mut k = 0;
            let mut y = x;
            while y.is_multiple_of(p) && y > 1 {
                y /= p;
                k += 1;
            }
            k
        };
        let mut powers = Vec::new();
        let mut prev = 0;
        for j in 1..=a {
            let c = log(count(p.pow(j)).max(1));
            let ge_j = c - prev;
            prev = c;
            if ge_j == 0 {
                break;
            }
            powers.push(ge_j);
        }
        // exponents from the counts of factors with exponent >= j
        let mut exps = Vec::new();
        for j in 0..powers.len() {
            let next = powers.get(j + 1).copied().unwrap_or(0);
            for _ in 0..powers[j] - next {
                exps.push(p.pow(j as u32 + 1));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(exps);
    }
    let width = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> =
        (0..width).map(|i| per_prime.iter().map(|e| e.get(i).copied().unwrap_or(1)).product()).collect();
    factors.sort_unstable();
    factors
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidirectCertificate {
    pub normal_order: usize,
    pub normal_cyclic: bool,
    pub normal_perfect: bool,
    /// A generating set of the normal factor.
    pub normal_generators: Vec<Permutation>,
    pub complement_order: usize,
    pub complement_cyclic: bool,
    /// Invariant factors when the complement is abelian.
    pub complement_invariants: Option<Vec<u64>>,
    pub complement_generators: Vec<Permutation>,
}

impl SemidirectCertificate {
    pub fn complement_is_klein_four(&self) -> bool {
        self.complement_invariants.as_deref() == Some(&[2, 2])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub derived_perfect: bool,
    pub abelianization: Vec<u64>,
    pub normal_subgroup_orders: Vec<usize>,
    pub semidirect_certificates: Vec<SemidirectCertificate>,
}

/// Structural data of `g`. Vertex and edge transitivity refer to the
/// vertices and edges of `c` when given, otherwise to all points and point
/// pairs of `0..degree`.
pub fn group_analysis(g: &PermutationGroup, c: Option<&SimplicialComplex>, cap: usize) -> Result<GroupFingerprint> {
    if g.order() > cap {
        return Err(Error::GroupTooLarge { order: g.order(), cap });
    }
    let t = Table::new(g);
    let all = t.all();
    let derived = t.derived(&all);
    let normals = t.normal_subgroups(&all);
    let mut certs = Vec::new();
    for n in normals.iter().filter(|n| n.len() > 1 && n.len() < all.len()) {
        for h in t.complements(&all, n) {
            certs.push(SemidirectCertificate {
                normal_order: n.len(),
                normal_cyclic: t.is_cyclic(n),
                normal_perfect: t.derived(n).len() == n.len(),
                normal_generators: generators_of(&t, n),
                complement_order: h.len(),
                complement_cyclic: t.is_cyclic(&h),
                complement_invariants: t.abelian_invariants(&h),
                complement_generators: generators_of(&t, &h),
            });
        }
    }
    let (points, pairs): (Vec<u32>, Vec<Simplex>) = match c {
        Some(c) => (c.vertices(), c.edges().to_vec()),
        None => {
            let n = g.degree() as u32;
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| Simplex::vertex(i).with_vertex(j))).collect();
            ((0..n).collect(), pairs)
        }
    };
    let vertex_transitive = points.first().is_none_or(|&v| g.orbit(v).len() == points.len());
    let edge_transitive = pairs.first().is_none_or(|&e| {
        let orbit: BTreeSet<Simplex> = g.elements().iter().map(|p| e.map(p.images())).collect();
        orbit.len() == pairs.len()
    });
    Ok(GroupFingerprint {
        order: g.order(),
        vertex_transitive,
        edge_transitive,
        center_order: t.center(&all).len(),
        derived_perfect: t.derived(&derived).len() == derived.len(),
        derived_order: derived.len(),
        abelianization: t.abelianization(&all),
        normal_subgroup_orders: normals.iter().map(Vec::len).collect(),
        semidirect_certificates: certs,
    })
}

fn generators_of(t: &Table, h: &[usize]) -> Vec<Permutation> {
    let elems: Vec<Permutation> = h.iter().map(|&i| t.element(i).clone()).collect();
    let degree = elems.first().map(Permutation::degree).unwrap_or(0);
    greedy_generators(degree, &{
        let mut e = elems;
        e.sort();
        e
    })
}

/// Looks for a subgroup of order 120 with trivial center and abelianization
/// of order 2 (the shape of S5). In a group of order 240 such a subgroup has
/// index 2, hence is normal, so the normal subgroups cover every candidate.
pub fn has_s5_shaped_subgroup(g: &PermutationGroup) -> Result<bool> {
    if g.order() != 240 {
        return Err(Error::InvalidConfig(format!("expected a group of order 240, got {}", g.order())));
    }
    let t = Table::new(g);
    let all = t.all();
    Ok(t.normal_subgroups(&all).iter().filter(|h| h.len() == 120).any(|h| {
        t.center(h).len() == 1 && t.abelianization(h).iter().product::<u64>() == 2
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermutationGroup {
        let mut cyc: Vec<u8> = (1..n as u8).collect();
        cyc.push(0);
        let mut swap: Vec<u8> = (0..n as u8).collect();
        swap.swap(0, 1);
        PermutationGroup::generate(
            n,
            vec![Permutation::from_images(cyc).unwrap(), Permutation::from_images(swap).unwrap()],
            MATERIALIZATION_CAP,
        )
        .unwrap()
    }

    #[test]
    fn symmetric_group_data() {
        let s4 = sym(4);
        assert_eq!(s4.order(), 24);
        let f = group_analysis(&s4, None, 240).unwrap();
        assert_eq!(f.center_order, 1);
        assert_eq!(f.derived_order, 12);
        assert!(!f.derived_perfect);
        assert_eq!(f.abelianization, vec![2]);
        assert_eq!(f.normal_subgroup_orders, vec![1, 4, 12, 24]);
        assert!(f.semidirect_certificates.iter().any(|c| c.normal_order == 12 && c.complement_order == 2));
        let s5 = sym(5);
        let f5 = group_analysis(&s5, None, 240).unwrap();
        assert!(f5.derived_perfect && f5.derived_order == 60);
    }

    #[test]
    fn trivial_group_fingerprint() {
        let f = group_analysis(&PermutationGroup::trivial(3), None, 240).unwrap();
        assert_eq!((f.order, f.center_order, f.derived_order), (1, 1, 1));
        assert!(f.abelianization.is_empty());
        assert_eq!(f.normal_subgroup_orders, vec![1]);
        assert!(f.semidirect_certificates.is_empty());
    }

    #[test]
    fn abelian_invariants_of_products() {
        // C2 x C6 acting on 2 + 2 + 3 points
        let a = Permutation::parse("(0,1)", 7).unwrap();
        let b = Permutation::parse("(2,3)(4,5,6)", 7).unwrap();
        let g = PermutationGroup::generate(7, vec![a, b], 100).unwrap();
        let t = Table::new(&g);
        assert_eq!(t.abelian_invariants(&t.all()), Some(vec![2, 6]));
        assert_eq!(t.abelianization(&t.all()), vec![2, 6]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            PermutationGroup::generate(5, sym(5).generators().to_vec(), 50),
            Err(Error::GroupTooLarge { .. })
        ));
        assert!(group_analysis(&sym(5), None, 100).is_err());
    }
}
