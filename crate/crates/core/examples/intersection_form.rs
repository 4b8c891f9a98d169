//! Integral homology and the cup-product form, with an explicit pair of
//! 2-spheres in M3 meeting once.
//!
//! cargo run --release --example intersection_form

use s2s2::algebra::{homology, surface_cycle, IntersectionForm};
use s2s2::{bundled, Simplex};

fn main() -> s2s2::Result<()> {
    for i in 1..=5 {
        let c = bundled::candidate(i);
        let h = homology(&c);
        let form = IntersectionForm::compute(&c)?.class;
        println!(
            "M{i}: betti {:?} torsion-free {} rank {} {} signature {} det {}",
            h.betti,
            h.is_torsion_free(),
            form.rank,
            form.parity,
            form.signature,
            form.determinant
        );
    }
    let m3 = bundled::candidate(3);
    let even = m3.span(Simplex::parse("02468a")?);
    let small = m3.span(Simplex::parse("0135")?);
    println!("<0135> is a facet of M3: {}", m3.contains(Simplex::parse("0135")?));
    let z1 = surface_cycle(&even)?;
    let z2 = surface_cycle(&small)?;
    let form = IntersectionForm::compute(&m3)?;
    println!("octahedron . tetrahedron boundary = {}", form.intersect(&z1, &z2)?);
    Ok(())
}
