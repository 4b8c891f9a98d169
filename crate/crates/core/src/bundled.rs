//! The candidate complexes shipped with the crate.

use crate::complex::io::parse_cycles;
use crate::complex::{DifferenceCycle, SimplicialComplex};

pub const M1_DC: &str = include_str!("../data/m1.dc");
pub const M2_DC: &str = include_str!("../data/m2.dc");
pub const M3_DC: &str = include_str!("../data/m3.dc");
pub const M4_DC: &str = include_str!("../data/m4.dc");
pub const M5_DC: &str = include_str!("../data/m5.dc");
pub const M6_DC: &str = include_str!("../data/m6.dc");
/// Eight-orbit Eulerian pseudomanifold without the `<06>` diagonal.
pub const R41_DC: &str = include_str!("../data/r41.dc");
/// Facets of candidate 1, transcribed by hand and normalized.
pub const M1_FCT: &str = include_str!("../data/m1.fct");

/// All bundled `.dc` sources by short name.
pub const ALL: [(&str, &str); 7] = [
    ("m1", M1_DC),
    ("m2", M2_DC),
    ("m3", M3_DC),
    ("m4", M4_DC),
    ("m5", M5_DC),
    ("m6", M6_DC),
    ("r41", R41_DC),
];

pub fn source(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
}

pub fn cycles(name: &str) -> Option<Vec<DifferenceCycle>> {
    let (_, cs) = parse_cycles(source(name)?).expect("bundled data parses");
    Some(cs)
}

/// Candidate `i` in `1..=6`.
pub fn candidate(i: usize) -> SimplicialComplex {
    complex(&format!("m{i}")).unwrap_or_else(|| panic!("no bundled candidate {i}"))
}

pub fn remark_complex() -> SimplicialComplex {
    complex("r41").expect("bundled")
}

pub fn complex(name: &str) -> Option<SimplicialComplex> {
    Some(SimplicialComplex::from_cycles(&cycles(name)?).expect("bundled data is valid"))
}
