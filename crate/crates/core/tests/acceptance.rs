//! End-to-end acceptance checks. Each check prints one PASS/FAIL line;
//! every comparison is exact.
//!
//! Two checks are known to fail. They are listed in `KNOWN_FAILURES` and
//! still print FAIL; the test passes only when the failing set is exactly
//! that list.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use s2s2::algebra::{boundary_matrix, homology, smith_decomposition, surface_cycle, IntersectionForm, Parity};
use s2s2::bundled;
use s2s2::cli::run;
use s2s2::complex::io::write_facets;
use s2s2::complex::{check_bound_equality, check_dehn_sommerville, orbit_decomposition};
use s2s2::enumerate::{enumerate, Filter, SearchConfig};
use s2s2::symmetry::{
    automorphisms, group_analysis, has_s5_shaped_subgroup, is_isomorphic, link_bijections, multiplier_image,
    multipliers, Isomorphism, Permutation, PermutationGroup, Refutation, Table, MATERIALIZATION_CAP,
};
use s2s2::topology::{
    antipodal_pairing, check_2_hamiltonian, eulerian_check, is_sphere_2, mobius_partitions, singular_locus_from_report,
    valence_vector, verify_manifold, ManifoldVerdict, Verdict,
};
use s2s2::{DifferenceCycle, FVector, Simplex, SimplicialComplex};

/// Checks expected to fail, with the reason recorded alongside the build.
const KNOWN_FAILURES: &[&str] = &[
    // Dehn-Sommerville alone does not admit candidate (6): it violates the
    // first relation.
    "3.3",
    // The singular locus also holds three 2-spheres, and the two tori
    // share vertices and edges.
    "4.9",
];

const TOLERANCE: &str = "exact";

#[derive(Default)]
struct Sheet {
    failed: Vec<String>,
}

impl Sheet {
    fn check(&mut self, id: &str, what: &str, ok: bool, detail: impl AsRef<str>) {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {id} {what} ({}; tolerance {TOLERANCE})", detail.as_ref());
        if !ok {
            self.failed.push(id.to_string());
        }
    }
}

fn p(s: &str) -> Permutation {
    Permutation::parse(s, 12).unwrap()
}

fn s(label: &str) -> Simplex {
    Simplex::parse(label).unwrap()
}

fn cycles_of(c: &SimplicialComplex) -> Vec<DifferenceCycle> {
    orbit_decomposition(c).unwrap()
}

/// Undoes stellar subdivisions at degree-3 vertices and tests for the
/// octahedron boundary.
fn is_subdivided_octahedron(lk: &SimplicialComplex) -> bool {
    let mut facets: BTreeSet<Simplex> = lk.facets().iter().copied().collect();
    loop {
        let c = SimplicialComplex::from_facets(lk.n(), facets.iter().copied()).unwrap();
        if c.f_vector() == FVector(vec![6, 12, 8]) {
            return c.vertices().iter().all(|&v| c.degree(v) == 4);
        }
        let Some(v) = c.vertices().into_iter().find(|&v| c.degree(v) == 3) else {
            return false;
        };
        let nb = c.neighbours(v);
        if c.contains(nb) {
            return false;
        }
        facets.retain(|f| !f.contains_vertex(v));
        facets.insert(nb);
    }
}

fn criterion_1(sh: &mut Sheet) {
    let m1 = bundled::candidate(1);
    let text = write_facets(&m1);
    sh.check("1.1", "expansion of (1) byte-equals the golden facet table", text == bundled::M1_FCT, format!("{} facets", m1.facets().len()));
}

fn criterion_2(sh: &mut Sheet) {
    let target = FVector(vec![12, 60, 160, 180, 72]);
    for i in 1..=5 {
        let c = bundled::candidate(i);
        let f = c.f_vector();
        let ds = check_dehn_sommerville(&f).unwrap();
        sh.check(
            &format!("2.{i}"),
            &format!("({i}) f-vector, Dehn-Sommerville, chi"),
            f == target && ds.ds1 && ds.ds2 && ds.chi == 4,
            format!("f={f} ds1={} ds2={} chi={}", ds.ds1, ds.ds2, ds.chi),
        );
    }
    let r = bundled::remark_complex();
    let f = r.f_vector();
    sh.check(
        "2.6",
        "8-orbit complex f-vector and chi",
        f == FVector(vec![12, 66, 204, 240, 96]) && r.euler_characteristic() == 6,
        format!("f={f} chi={}", r.euler_characteristic()),
    );
}

fn labels(found: &[s2s2::enumerate::Candidate]) -> Vec<Option<usize>> {
    found
        .iter()
        .map(|c| (1..=6).find(|&i| bundled::cycles(&format!("m{i}")).as_deref() == Some(c.cycles.as_slice())))
        .collect()
}

fn show(ls: &[Option<usize>]) -> String {
    ls.iter().map(|l| l.map_or("new".into(), |i| format!("({i})"))).collect::<Vec<_>>().join(" ")
}

fn criterion_3(sh: &mut Sheet) {
    let base = SearchConfig::new(12, 4, 6).with_diagonal(0, 6);
    let t = Instant::now();
    let main = enumerate(&base.clone().with_filters([Filter::RidgeDegree2, Filter::EdgeLinkEuler])).unwrap();
    let elapsed = t.elapsed();
    let ls = labels(&main);
    let has_1_5 = (1..=5).all(|i| ls.contains(&Some(i)));
    let inside = ls.iter().all(|l| l.is_some());
    sh.check("3.1", "ridge + edge-link run holds (1)-(5) and nothing new", has_1_5 && inside, show(&ls));
    sh.check("3.2", "ridge + edge-link run under 60 s single-threaded", elapsed < Duration::from_secs(60), format!("{elapsed:?}"));
    let ds = labels(&enumerate(&base.clone().with_filters([Filter::RidgeDegree2, Filter::DehnSommerville])).unwrap());
    sh.check("3.3", "ridge + Dehn-Sommerville run admits (6)", ds.contains(&Some(6)), show(&ds));
    let ridge = labels(&enumerate(&base.clone().with_filters([Filter::RidgeDegree2])).unwrap());
    let ds6 = check_dehn_sommerville(&bundled::candidate(6).f_vector()).unwrap();
    sh.check(
        "3.4",
        "membership of (6) recorded per configuration",
        ridge.contains(&Some(6)) && !ls.contains(&Some(6)),
        format!("ridge only: {}; (6) ds1={} ds2={}", show(&ridge), ds6.ds1, ds6.ds2),
    );
}

fn criterion_4(sh: &mut Sheet) {
    for i in 1..=5 {
        let c = bundled::candidate(i);
        let r = verify_manifold(&c, true).unwrap();
        let full = verify_manifold(&c, false).unwrap();
        sh.check(
            &format!("4.{i}"),
            &format!("({i}) is a combinatorial manifold with replayable certificates"),
            r.is_manifold == ManifoldVerdict::Yes
                && full.is_manifold == ManifoldVerdict::Yes
                && r.replay(&c)
                && full.replay(&c),
            format!("{} orbit links, {} links", r.link_verdicts.len(), full.link_verdicts.len()),
        );
    }
    let m6 = bundled::candidate(6);
    let r6 = verify_manifold(&m6, true).unwrap();
    let w = r6.verdict_for(s("04"), 12).unwrap();
    sh.check(
        "4.6",
        "(6) is not a manifold, witness edge <04>",
        r6.is_manifold == ManifoldVerdict::No
            && w.certificate.verdict == Verdict::NotSphere
            && w.link_f_vector == FVector(vec![7, 18, 12])
            && w.link_chi == 1
            && !eulerian_check(&m6),
        format!("lk(04) f={} chi={} eulerian={}", w.link_f_vector, w.link_chi, eulerian_check(&m6)),
    );
    let r41 = bundled::remark_complex();
    let rr = verify_manifold(&r41, true).unwrap();
    let w = rr.verdict_for(s("01"), 12).unwrap();
    sh.check(
        "4.7",
        "8-orbit complex is not a manifold, witness edge <01>, Eulerian",
        rr.is_manifold == ManifoldVerdict::No && w.certificate.verdict == Verdict::NotSphere && eulerian_check(&r41),
        format!("lk(01) f={} via {}", w.link_f_vector, w.certificate.method),
    );
    let locus = singular_locus_from_report(&r41, &rr);
    let cyc = |a: &[&str]| -> Vec<DifferenceCycle> {
        let mut v: Vec<DifferenceCycle> = a.iter().map(|t| DifferenceCycle::of_simplex(s(t), 12).unwrap()).collect();
        v.sort();
        v
    };
    let want = [cyc(&["012", "05a"]), cyc(&["015", "045"])];
    let tori: Vec<_> = locus.surfaces.iter().filter(|x| x.class.is_torus()).collect();
    let found = want.iter().all(|w| tori.iter().any(|t| &t.cycles == w));
    sh.check(
        "4.8",
        "singular locus carries tori {012,05a} and {015,045}",
        found,
        format!("{} tori among {} surfaces", tori.len(), locus.surfaces.len()),
    );
    let vsets: Vec<Simplex> =
        tori.iter().map(|t| t.triangles.iter().fold(Simplex::EMPTY, |a, &b| a.union(b))).collect();
    let disjoint = vsets.len() == 2 && vsets[0].is_disjoint(vsets[1]);
    sh.check(
        "4.9",
        "singular locus is exactly two disjoint tori",
        locus.surfaces.len() == 2 && tori.len() == 2 && disjoint && locus.residue.is_empty(),
        format!(
            "surfaces: {}; tori share {} vertices",
            locus.surfaces.iter().map(|x| x.class.to_string()).collect::<Vec<_>>().join(", "),
            vsets.first().zip(vsets.get(1)).map_or(0, |(a, b)| a.intersection(*b).len())
        ),
    );
}

fn criterion_5(sh: &mut Sheet) {
    let m1 = bundled::candidate(1);
    let want = [[1, 3, 3, 1], [2, 0, 6, 0], [2, 2, 2, 2], [1, 4, 1, 2], [1, 3, 3, 1]];
    let got: Vec<[usize; 4]> = (1..=5).map(|j| valence_vector(&m1, Simplex::new([0, j]).unwrap()).unwrap()).collect();
    sh.check("5.1", "valence vectors of <0j> in M1, j=1..5", got == want, format!("{got:?}"));
    let v = valence_vector(&bundled::candidate(3), s("03")).unwrap();
    sh.check("5.2", "valence vector of <03> in M3", v == [0, 4, 4, 0], format!("{v:?}"));
    let m2 = bundled::candidate(2);
    let links: Vec<SimplicialComplex> = m2.edges().iter().map(|&e| m2.link(e).unwrap()).collect();
    let all = links.iter().all(|lk| {
        is_sphere_2(lk).unwrap().verdict == Verdict::Sphere
            && is_subdivided_octahedron(lk)
            && is_isomorphic(lk, &links[0]).bijection().is_some()
    });
    let vv: BTreeSet<[usize; 4]> = m2.edges().iter().map(|&e| valence_vector(&m2, e).unwrap()).collect();
    sh.check(
        "5.3",
        "every edge link of M2 is a subdivided octahedron, all equivalent",
        all && vv.len() == 1,
        format!("{} edges, valence {:?}", links.len(), vv),
    );
    let iso = |a: usize, b: usize| is_isomorphic(&bundled::candidate(a), &bundled::candidate(b));
    let refuted = [(1, 2), (2, 3), (1, 3)]
        .iter()
        .all(|&(a, b)| matches!(iso(a, b), Isomorphism::Refuted(Refutation::ValenceVectors { .. })));
    sh.check("5.4", "M1, M2, M3 pairwise refuted by valence vectors", refuted, "3 pairs");
    let confirm = |a: usize, b: usize| {
        iso(a, b).bijection().is_some_and(|p| bundled::candidate(a).relabel(p.images()) == bundled::candidate(b))
    };
    sh.check("5.5", "M1 ~ M5 and M2 ~ M4 by explicit bijections", confirm(1, 5) && confirm(2, 4), "bijections replayed");
}

fn criterion_6(sh: &mut Sheet) {
    let lk = |i: usize| {
        let c = bundled::candidate(i);
        link_bijections(&c, 0, &c, 0)
    };
    let (l1, l2, l3) = (lk(1), lk(2), lk(3));
    let alpha = p("(1,5)(2,a)(4,8)(7,b)");
    let betas = [p("(1,b)(2,a)(3,9)(4,8)(5,7)"), p("(1,7)(3,9)(5,b)"), p("(1,5)(2,a)(4,8)(7,b)")];
    let in_l2 = [p("(2,a,b,9,7)(1,8,4,5,3)"), p("(1,a,8,9)(2,3,7,4)(5,b)")];
    sh.check(
        "6.1",
        "|Aut(lk(0,Mi))| = 2, 20, 4 with alpha and beta1..3",
        l1.len() == 2
            && l2.len() == 20
            && l3.len() == 4
            && l1.contains(&alpha)
            && betas.iter().all(|b| l3.contains(b))
            && in_l2.iter().all(|x| l2.contains(x)),
        format!("{}, {}, {}", l1.len(), l2.len(), l3.len()),
    );
    let groups: Vec<(SimplicialComplex, PermutationGroup)> = (1..=3)
        .map(|i| {
            let c = bundled::candidate(i);
            let g = automorphisms(&c).unwrap();
            (c, g)
        })
        .collect();
    let orders: Vec<usize> = groups.iter().map(|(_, g)| g.order()).collect();
    sh.check("6.2", "|Aut(Mi)| = 24, 240, 48", orders == [24, 240, 48], format!("{orders:?}"));
    let fps: Vec<_> =
        groups.iter().map(|(c, g)| group_analysis(g, Some(c), MATERIALIZATION_CAP).unwrap()).collect();
    let vt: Vec<bool> = fps.iter().map(|f| f.vertex_transitive).collect();
    let et: Vec<bool> = fps.iter().map(|f| f.edge_transitive).collect();
    sh.check(
        "6.3",
        "vertex-transitive for all, edge-transitive only for M2",
        vt == [true, true, true] && et == [false, true, false],
        format!("vt={vt:?} et={et:?}"),
    );
    let zeta = Permutation::shift(1, 12);
    sh.check(
        "6.4",
        "zeta in every Aut(Mi), zeta^6 fixed-point-free",
        groups.iter().all(|(_, g)| g.contains(&zeta)) && zeta.power(6).fixed_points() == 0,
        "3 groups",
    );
    let f2 = &fps[1];
    let a5c4 = f2.semidirect_certificates.iter().any(|c| {
        c.normal_order == 60 && c.normal_perfect && c.complement_order == 4 && c.complement_cyclic
    });
    sh.check(
        "6.5",
        "Aut(M2): center 2, derived 60 perfect, normal orders {1,2,60,120,240}, certificate (60,4)",
        f2.center_order == 2
            && f2.derived_order == 60
            && f2.derived_perfect
            && f2.normal_subgroup_orders == [1, 2, 60, 120, 240]
            && a5c4,
        format!(
            "center {} derived {} normals {:?}",
            f2.center_order, f2.derived_order, f2.normal_subgroup_orders
        ),
    );
    let paper_gens = [
        p("(0,7,3,4,2)(1,9,a,8,6)"),
        p("(0,6)(1,7)(2,8)(3,9)(4,a)(5,b)"),
        p("(0,6)(1,9)(2,5)(3,7)(4,a)(8,b)"),
    ];
    let sub = PermutationGroup::generate(12, paper_gens.to_vec(), MATERIALIZATION_CAP).unwrap();
    let mut with_zeta = paper_gens.to_vec();
    with_zeta.push(zeta.clone());
    let full = PermutationGroup::generate(12, with_zeta, MATERIALIZATION_CAP).unwrap();
    let s5 = has_s5_shaped_subgroup(&groups[1].1).unwrap();
    sh.check(
        "6.6",
        "listed A5 x C2 generators have order 120, with zeta 240; no S5-shaped subgroup",
        sub.order() == 120 && full.elements() == groups[1].1.elements() && !s5,
        format!("{} / {} / s5 {}", sub.order(), full.order(), s5),
    );
    // <zeta> as the normal factor: its generated group must be exactly <zeta>.
    let zeta_group = PermutationGroup::generate(12, vec![zeta.clone()], 12).unwrap();
    let is_zeta = |gens: &[Permutation]| {
        PermutationGroup::generate(12, gens.to_vec(), MATERIALIZATION_CAP).unwrap().elements() == zeta_group.elements()
    };
    let c1 = fps[0].semidirect_certificates.iter().any(|c| {
        c.normal_order == 12 && c.complement_order == 2 && is_zeta(&c.normal_generators)
    });
    sh.check("6.7", "Aut(M1) certificate (12,2) with normal <zeta>", c1, "C12 : C2");
    let c3 = fps[2].semidirect_certificates.iter().any(|c| {
        c.normal_order == 12 && c.complement_order == 4 && c.complement_is_klein_four() && is_zeta(&c.normal_generators)
    });
    sh.check("6.8", "Aut(M3) certificate (12,4) with normal <zeta> and Klein-four complement", c3, "C12 : (C2 x C2)");
    let bound: Vec<bool> =
        [(0, &l1), (1, &l2), (2, &l3)].iter().map(|(i, l)| orders[*i] == 12 * l.len()).collect();
    sh.check("6.9", "|Aut(Mi)| = 12 |Aut(lk(0,Mi))|", bound.iter().all(|&b| b), format!("{bound:?}"));
    let t = Table::new(&groups[1].1);
    let center = t.center(&t.all());
    sh.check("6.10", "center of Aut(M2) is generated by zeta^6", center.iter().any(|&i| *t.element(i) == zeta.power(6)), "C2");
}

fn criterion_7(sh: &mut Sheet) {
    let m: Vec<Vec<u32>> = (1..=3).map(|i| multipliers(&bundled::candidate(i)).unwrap()).collect();
    sh.check(
        "7.1",
        "multipliers {1,5}, {1,5}, {1,5,7,11}",
        m == [vec![1, 5], vec![1, 5], vec![1, 5, 7, 11]],
        format!("{m:?}"),
    );
    let img = |i: usize| cycles_of(&multiplier_image(&bundled::candidate(i), 11).unwrap());
    let ok = img(1) == bundled::cycles("m5").unwrap() && img(2) == bundled::cycles("m4").unwrap();
    let mu7 = |i: usize| multiplier_image(&bundled::candidate(i), 7).unwrap();
    sh.check(
        "7.2",
        "mu11 maps (1) to (5) and (2) to (4)",
        ok,
        format!("mu7 also: (1)->(5) {}, (2)->(4) {}", mu7(1) == bundled::candidate(5), mu7(2) == bundled::candidate(4)),
    );
    let parts: Vec<usize> = (1..=3)
        .map(|i| mobius_partitions(&bundled::candidate(i).link(Simplex::vertex(0)).unwrap()).unwrap().len())
        .collect();
    sh.check("7.3", "Moebius partition of lk(0) unique for M2, absent for M1, M3", parts == [0, 1, 0], format!("{parts:?}"));
    let octa = |c: &SimplicialComplex, vs: &str| {
        let sp = c.span(s(vs));
        sp.f_vector() == FVector(vec![6, 12, 8]) && sp.vertices().iter().all(|&v| sp.degree(v) == 4)
    };
    let cylinder = ["024", "246", "468", "68a", "08a", "02a"];
    let spans = (1..=3).all(|i| {
        let c = bundled::candidate(i);
        octa(&c, "02468a") && octa(&c, "13579b") && cylinder.iter().all(|t| c.contains(s(t)))
    });
    sh.check("7.4", "even and odd spans are octahedron boundaries", spans, "M1, M2, M3");
    let r = bundled::remark_complex();
    let rm = multipliers(&r).unwrap();
    sh.check("7.5", "8-orbit complex invariant under all four multipliers", rm == [1, 5, 7, 11], format!("{rm:?}"));
    let ham = (1..=5).all(|i| check_2_hamiltonian(&bundled::candidate(i), &antipodal_pairing(12)).unwrap().holds);
    let cs = (1..=5).all(|i| bundled::candidate(i).is_centrally_symmetric().unwrap());
    sh.check("7.6", "(1)-(5) centrally symmetric and 2-Hamiltonian in the cross-polytope", ham && cs, "5 complexes");
}

fn criterion_8(sh: &mut Sheet) {
    for i in 1..=3 {
        let c = bundled::candidate(i);
        let h = homology(&c);
        let f = IntersectionForm::compute(&c).unwrap().class;
        sh.check(
            &format!("8.{i}"),
            &format!("M{i}: torsion-free, Betti (1,0,2,0,1), form rank 2 even signature 0"),
            h.is_torsion_free() && h.betti == [1, 0, 2, 0, 1] && f.rank == 2 && f.parity == Parity::Even && f.signature == 0,
            format!("betti {:?} det {}", h.betti, f.determinant),
        );
    }
    let b = check_bound_equality(4, 2, 6, 6);
    sh.check(
        "8.4",
        "LBT (k=2, d=6) and UBT (m=6) equalities",
        b.lbt_equal() && b.ubt_equal() && b.lbt_lhs == b.ubt_lhs,
        format!("{} = {}, {} = {}", b.lbt_lhs, b.lbt_rhs, b.ubt_lhs, b.ubt_rhs),
    );
    let m3 = bundled::candidate(3);
    let form = IntersectionForm::compute(&m3).unwrap();
    let z1 = surface_cycle(&m3.span(s("02468a"))).unwrap();
    let z2 = surface_cycle(&m3.span(s("0135"))).unwrap();
    let x = form.intersect(&z1, &z2).unwrap();
    sh.check(
        "8.5",
        "octahedral sphere and tetrahedral sphere in M3 meet with sign +-1",
        x.magnitude() == &1u32.into() && !m3.contains(s("0135")),
        format!("intersection {x}; <0135> absent"),
    );
}

fn criterion_9(sh: &mut Sheet) {
    let mut same = true;
    for args in [
        vec!["verify", "r41", "--full", "--witness", "--format", "json"],
        vec!["verify", "m2", "--full", "--witness", "--strategy", "bistellar"],
        vec!["verify", "m6", "--witness"],
        vec!["enumerate", "--filters", "ridge"],
    ] {
        let outs: Vec<(i32, String)> = ["1", "2", "4"]
            .iter()
            .map(|j| {
                let mut a = vec!["s2s2"];
                a.extend(args.iter().copied());
                a.extend(["--jobs", j]);
                run(a)
            })
            .collect();
        same &= outs.windows(2).all(|w| w[0] == w[1]);
    }
    sh.check("9.1", "byte-identical outputs for --jobs 1, 2, 4", same, "4 commands");
    let mut zero = true;
    let mut snf = true;
    for (name, _) in bundled::ALL {
        let c = bundled::complex(name).unwrap();
        for k in 1..=4 {
            let d = boundary_matrix(&c, k);
            if k < 4 {
                zero &= d.mul(&boundary_matrix(&c, k + 1)).is_zero();
            }
            if k <= 2 {
                snf &= smith_decomposition(&d).verify(&d);
            }
        }
    }
    sh.check("9.2", "boundary of boundary is zero on all bundled complexes", zero, "7 complexes");
    sh.check("9.3", "Smith decompositions U A V = D with U U^-1 = 1", snf, "boundary maps of degree 1, 2");
    let replay = bundled::ALL.iter().all(|(name, _)| {
        let c = bundled::complex(name).unwrap();
        [true, false].iter().all(|&t| verify_manifold(&c, t).unwrap().replay(&c))
    });
    sh.check("9.4", "every sphere certificate replays", replay, "7 complexes, both modes");
}

#[test]
fn acceptance() {
    let mut sh = Sheet::default();
    criterion_1(&mut sh);
    criterion_2(&mut sh);
    criterion_3(&mut sh);
    criterion_4(&mut sh);
    criterion_5(&mut sh);
    criterion_6(&mut sh);
    criterion_7(&mut sh);
    criterion_8(&mut sh);
    criterion_9(&mut sh);
    println!("{} failing: {:?} (known: {KNOWN_FAILURES:?})", sh.failed.len(), sh.failed);
    assert_eq!(sh.failed, KNOWN_FAILURES, "unexpected acceptance result");
}
