//! The non-manifold 8-orbit complex: Eulerian, yet every edge link fails.
//! Its singular triangles split into closed surfaces.
//!
//! cargo run --release --example singular_locus

use s2s2::bundled;
use s2s2::symmetry::multipliers;
use s2s2::topology::{eulerian_check, singular_locus, VerifyOptions};

fn main() -> s2s2::Result<()> {
    let c = bundled::remark_complex();
    println!("f-vector {} chi {}", c.f_vector(), c.euler_characteristic());
    println!("eulerian {}", eulerian_check(&c));
    println!("multipliers {:?}", multipliers(&c)?);
    let lk = c.link(s2s2::Simplex::parse("01")?)?;
    println!("lk(01) f-vector {}", lk.f_vector());
    let locus = singular_locus(&c, &VerifyOptions::default())?;
    println!("singular faces {}", locus.faces.len());
    for s in &locus.surfaces {
        let cycles: Vec<String> = s.cycles.iter().map(|c| format!("{c:?}")).collect();
        println!("  {} triangles {}: {}", s.triangles.len(), s.class, cycles.join(" + "));
    }
    println!("unaccounted singular triangles {}", locus.residue.len());
    Ok(())
}
