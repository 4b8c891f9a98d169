//! Octahedral even and odd spans, and splittings of the vertex link of 0
//! into two Moebius strips.
//!
//! cargo run --release --example mobius

use s2s2::topology::{antipodal_pairing, check_2_hamiltonian, mobius_partitions};
use s2s2::{bundled, Simplex};

fn main() -> s2s2::Result<()> {
    for i in 1..=3 {
        let c = bundled::candidate(i);
        let even = c.span(Simplex::parse("02468a")?);
        let odd = c.span(Simplex::parse("13579b")?);
        let ham = check_2_hamiltonian(&c, &antipodal_pairing(12))?;
        let lk = c.link(Simplex::vertex(0))?;
        let parts = mobius_partitions(&lk)?;
        println!(
            "M{i}: even span {} odd span {} 2-Hamiltonian {} Moebius partitions {}",
            even.f_vector(),
            odd.f_vector(),
            ham.holds,
            parts.len()
        );
        for (a, b) in parts {
            println!("  {a} | {b}");
        }
    }
    Ok(())
}
