//! Exact integer linear algebra: Smith normal form, homology, orientation
//! and the intersection form.

pub mod form;
pub mod homology;
pub mod matrix;

pub use form::{characteristic_polynomial, intersection_form, FormClass, IntersectionForm, Parity};
pub use homology::{
    boundary_matrix, chain_boundary, coboundary_matrix, fundamental_chain, homology, orient, surface_cycle,
    HomologyProfile,
};
pub use matrix::{kernel_basis, smith_decomposition, smith_normal_form, IntegerMatrix, SmithDecomposition, SmithForm};
