use s2s2::algebra::{boundary_matrix, homology, orient, IntersectionForm};
use s2s2::bundled;
use s2s2::complex::{io, orbit_decomposition};
use s2s2::symmetry::{automorphisms, link_bijections};
use s2s2::topology::{verify_manifold, verify_manifold_with, LinkStrategy, ManifoldVerdict, Verdict, VerifyOptions};

#[test]
fn data_files_round_trip() {
    for (name, src) in bundled::ALL {
        let (header, cycles) = io::parse_cycles(src).unwrap();
        let c = bundled::complex(name).unwrap();
        assert_eq!(io::write_cycles(header, &orbit_decomposition(&c).unwrap()), src, "{name}");
        assert_eq!(cycles.len(), orbit_decomposition(&c).unwrap().len());
    }
}

#[test]
fn boundary_squares_to_zero_everywhere() {
    for (name, _) in bundled::ALL {
        let c = bundled::complex(name).unwrap();
        for k in 1..4 {
            assert!(boundary_matrix(&c, k).mul(&boundary_matrix(&c, k + 1)).is_zero(), "{name} k={k}");
        }
    }
}

#[test]
fn every_sphere_certificate_replays() {
    for (name, _) in bundled::ALL {
        let c = bundled::complex(name).unwrap();
        for full in [false, true] {
            let r = verify_manifold(&c, !full).unwrap();
            assert!(r.replay(&c), "{name}");
            for v in &r.link_verdicts {
                let lk = c.link(v.face).unwrap();
                assert!(v.certificate.replay(&lk), "{name} {}", v.face);
            }
        }
    }
}

#[test]
fn strategies_agree_on_manifolds() {
    for i in 1..=5 {
        let c = bundled::candidate(i);
        for strategy in [LinkStrategy::Auto, LinkStrategy::BallUnion, LinkStrategy::Bistellar] {
            let r = verify_manifold_with(&c, &VerifyOptions { use_transitivity: true, strategy, ..Default::default() })
                .unwrap();
            assert_eq!(r.is_manifold, ManifoldVerdict::Yes, "M{i} {strategy:?}");
            assert!(r.link_verdicts.iter().all(|v| v.certificate.verdict == Verdict::Sphere));
        }
    }
}

#[test]
fn verification_is_independent_of_jobs() {
    for name in ["m2", "m6", "r41"] {
        let c = bundled::complex(name).unwrap();
        let run = |jobs| {
            verify_manifold_with(&c, &VerifyOptions { use_transitivity: false, jobs, ..Default::default() }).unwrap()
        };
        assert_eq!(run(1), run(3), "{name}");
    }
}

#[test]
fn automorphism_bound_from_vertex_links() {
    for i in 1..=6 {
        let c = bundled::candidate(i);
        let g = automorphisms(&c).unwrap();
        assert!(g.generators().iter().all(|p| c.is_automorphism(p.images())));
        assert!(g.order() <= 12 * link_bijections(&c, 0, &c, 0).len(), "M{i}");
    }
}

#[test]
fn form_is_invariant_under_automorphisms() {
    let c = bundled::candidate(3);
    let base = IntersectionForm::compute(&c).unwrap().class;
    for p in automorphisms(&c).unwrap().generators() {
        let f = IntersectionForm::compute(&c.relabel(p.images())).unwrap().class;
        assert_eq!((f.rank, f.parity, f.signature), (base.rank, base.parity, base.signature));
    }
}

#[test]
fn non_manifold_candidate_is_still_orientable() {
    let m6 = bundled::candidate(6);
    assert!(orient(&m6).unwrap().is_some());
    assert_eq!(homology(&m6).chi, 0);
}
