//! Vertex-link bijections, automorphism groups and their structure for
//! M1, M2 and M3.
//!
//! cargo run --release --example automorphisms

use s2s2::bundled;
use s2s2::symmetry::{automorphisms, group_analysis, has_s5_shaped_subgroup, link_bijections, MATERIALIZATION_CAP};

fn main() -> s2s2::Result<()> {
    for i in 1..=3 {
        let c = bundled::candidate(i);
        let lk = link_bijections(&c, 0, &c, 0);
        let g = automorphisms(&c)?;
        let fp = group_analysis(&g, Some(&c), MATERIALIZATION_CAP)?;
        println!("M{i}: |Aut(lk 0)| = {}, |Aut| = {}", lk.len(), g.order());
        for p in lk.iter().filter(|p| !p.is_identity()).take(4) {
            println!("  link map {p}");
        }
        println!(
            "  center {} derived {}{} normal orders {:?}",
            fp.center_order,
            fp.derived_order,
            if fp.derived_perfect { " perfect" } else { "" },
            fp.normal_subgroup_orders
        );
        for cert in fp.semidirect_certificates.iter().filter(|c| c.normal_order >= 12) {
            println!(
                "  {} : {} complement {:?} normal <{}>",
                cert.normal_order,
                cert.complement_order,
                cert.complement_invariants,
                cert.normal_generators.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
            );
        }
        if g.order() == 240 {
            println!("  S5-shaped subgroup: {}", has_s5_shaped_subgroup(&g)?);
        }
    }
    Ok(())
}
