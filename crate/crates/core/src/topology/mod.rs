//! Link spheres, manifold verification and related combinatorial tests.

pub mod bistellar;
pub mod collapse;
pub mod sphere;
pub mod surface;
pub mod verify;

pub use bistellar::{BistellarConfig, Flip};
pub use collapse::{collapse, replay_collapse, CollapseResult};
pub use sphere::{is_sphere, is_sphere_2, is_sphere_3, Method, SphereCertificate, Strategy, Verdict, Witness};
pub use surface::{classify_surface, mobius_partitions, SurfaceClass};
pub use verify::{
    antipodal_pairing, check_2_hamiltonian, eulerian_check, find_ball_union, singular_locus, singular_locus_from_report,
    valence_vector, verify_manifold, verify_manifold_with, HamiltonCheck, LinkStrategy, LinkVerdict, ManifoldVerdict,
    SingularLocus, SingularSurface, VerificationReport, VerifyOptions,
};
