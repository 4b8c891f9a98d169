//! Cyclic 12-vertex triangulations of S² × S².
//!
//! The crate expands difference-cycle presentations into simplicial
//! complexes, re-runs the cyclic candidate enumeration, certifies link
//! spheres, computes automorphism groups and multipliers, and evaluates
//! integral homology together with the cup-product intersection form.
//!
//! ```
//! use s2s2::bundled;
//!
//! let m1 = bundled::candidate(1);
//! assert_eq!(m1.f_vector().0, vec![12, 60, 160, 180, 72]);
//! ```

pub mod algebra;
pub mod bundled;
pub mod cli;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod report;
pub mod symmetry;
pub mod topology;

pub use complex::{DifferenceCycle, FVector, Simplex, SimplicialComplex};
pub use error::{Error, Result};
