//! Filtered knot Floer complexes over F₂: data model, validation, strata and
//! the conjugation flip.

pub mod chain;
pub mod complex;
pub mod data;
pub mod fixtures;
pub mod random;
pub mod strata;
pub mod validate;

pub use chain::{Cell, ChainComplex, ChainMap, Label, Piece};
pub use complex::{Entry, KnotComplex, KnotError};
pub use data::{ComplexData, DiffEntryData, GeneratorData};
pub use strata::{flip_cell, flip_map, strata, Stratum, StratumParseError};
pub use validate::{validate, ValidationReport, Violation};
