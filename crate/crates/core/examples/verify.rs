//! Link-by-link manifold verification of every bundled complex, with
//! certificate replay.
//!
//! cargo run --release --example verify [-- --full]

use s2s2::bundled;
use s2s2::topology::{verify_manifold_with, VerifyOptions};

fn main() -> s2s2::Result<()> {
    let full = std::env::args().any(|a| a == "--full");
    let opts = VerifyOptions { use_transitivity: !full, jobs: 4, ..VerifyOptions::default() };
    for (name, _) in bundled::ALL {
        let c = bundled::complex(name).expect("bundled");
        let r = verify_manifold_with(&c, &opts)?;
        println!(
            "{name}: manifold {} eulerian {} links {} singular {} replay {}",
            r.is_manifold,
            r.eulerian,
            r.link_verdicts.len(),
            r.singular_faces.len(),
            r.replay(&c)
        );
        for v in r.negative() {
            println!("  {} link f-vector {} chi {} ({})", v.face, v.link_f_vector, v.link_chi, v.certificate.method);
        }
    }
    Ok(())
}
