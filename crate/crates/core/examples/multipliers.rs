//! Multipliers, multiplier images and pairwise isomorphism of the six
//! candidates.
//!
//! cargo run --release --example multipliers

use s2s2::bundled;
use s2s2::complex::orbit_decomposition;
use s2s2::symmetry::{is_isomorphic, multiplier_image, multipliers, Isomorphism};

fn main() -> s2s2::Result<()> {
    let cands: Vec<_> = (1..=6).map(bundled::candidate).collect();
    for (i, c) in cands.iter().enumerate() {
        let images: Vec<String> = [5, 7, 11]
            .iter()
            .map(|&a| {
                let img = multiplier_image(c, a).expect("unit");
                let j = cands.iter().position(|d| *d == img).map_or("?".into(), |j| format!("({})", j + 1));
                format!("mu{a} -> {j}")
            })
            .collect();
        println!("({}) multipliers {:?}; {}", i + 1, multipliers(c)?, images.join(", "));
    }
    let img = multiplier_image(&cands[0], 11)?;
    println!("mu11 image of (1): {:?}", orbit_decomposition(&img)?);
    for i in 0..6 {
        let row: Vec<&str> = (0..6)
            .map(|j| match is_isomorphic(&cands[i], &cands[j]) {
                Isomorphism::Bijection(_) => "~",
                Isomorphism::Refuted(_) => ".",
            })
            .collect();
        println!("({}) {}", i + 1, row.join(" "));
    }
    Ok(())
}
