//! Bundled example complexes.

use crate::complex::KnotComplex;

pub const UNKNOT: &str = include_str!("../fixtures/UNKNOT.kfc.json");
pub const TREF_A: &str = include_str!("../fixtures/TREF_A.kfc.json");
pub const TREF_B: &str = include_str!("../fixtures/TREF_B.kfc.json");
pub const FIG8: &str = include_str!("../fixtures/FIG8.kfc.json");

/// Names of all bundled fixtures.
pub const ALL: [&str; 4] = ["UNKNOT", "TREF_A", "TREF_B", "FIG8"];

/// JSON text of a bundled fixture.
pub fn source(name: &str) -> Option<&'static str> {
    match name {
        "UNKNOT" => Some(UNKNOT),
        "TREF_A" => Some(TREF_A),
        "TREF_B" => Some(TREF_B),
        "FIG8" => Some(FIG8),
        _ => None,
    }
}

/// A bundled fixture, parsed and validated.
pub fn by_name(name: &str) -> Option<KnotComplex> {
    source(name).map(|text| KnotComplex::from_json(text).expect("bundled fixtures are valid"))
}
