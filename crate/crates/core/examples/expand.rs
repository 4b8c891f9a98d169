//! Expands the bundled presentation of M1 and checks it against the
//! transcribed facet table.
//!
//! cargo run --example expand

use s2s2::bundled;
use s2s2::complex::io::{parse_facets, write_facets};
use s2s2::SimplicialComplex;

fn main() -> s2s2::Result<()> {
    let cycles = bundled::cycles("m1").expect("bundled");
    for c in &cycles {
        println!("{} orbit length {}", c.to_line(), c.orbit_length());
    }
    let m1 = SimplicialComplex::from_cycles(&cycles)?;
    let golden = parse_facets(bundled::M1_FCT, 12)?;
    println!("facets: {}", m1.facets().len());
    println!("f-vector: {}", m1.f_vector());
    println!("matches golden table: {}", m1.facets() == golden.as_slice());
    assert_eq!(write_facets(&m1), bundled::M1_FCT);
    Ok(())
}
