//! Automorphism groups, multipliers and isomorphisms.

mod group;
mod perm;
mod search;

pub use group::{
    group_analysis, has_s5_shaped_subgroup, GroupFingerprint, PermutationGroup, SemidirectCertificate, Table,
    MATERIALIZATION_CAP,
};
pub use perm::Permutation;
pub use search::{
    automorphisms, automorphisms_with_cap, is_isomorphic, link_bijections, multiplier_image, multipliers,
    valence_multiset, Isomorphism, Refutation,
};
