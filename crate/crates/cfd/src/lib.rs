//! The torus algebra and the type-D module of a knot complement, built from
//! the surgery cones and bypass maps, with structure-equation checks,
//! cancellation and export.

mod algebra;
mod build;
mod module;
mod simplify;

use thiserror::Error;

pub use algebra::{multiplication_table, Basis, Element, Idempotent, UnknownBasis};
pub use build::{build_cfd, build_unchecked, window, Part, Summand, Term};
pub use module::{Counts, Generator, Provenance, StructureFailure, TypeDModule};
pub use simplify::{simplify, simplify_with};

#[derive(Debug, Error)]
pub enum CfdError {
    #[error("entry {from} -> {to} has coefficient {coefficient} of the wrong idempotent type")]
    Typing { from: String, to: String, coefficient: String },
    #[error("structure equation fails from {from} to {to}: residue {residue}; paths: {}", paths.join("; "))]
    StructureEquation { from: String, to: String, residue: String, paths: Vec<String> },
    #[error("invalid module JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    UnknownBasis(#[from] UnknownBasis),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
}
