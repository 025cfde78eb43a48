//! The splice matrix of two knots, assembled from their normalized block
//! packages, together with the kernel/cokernel estimates derived from the
//! individual blocks.

mod estimates;
mod grid;
mod matrix;

use thiserror::Error;

use blocks::BlockError;
use knotcx::KnotComplex;

pub use estimates::{
    block_bounds, hat_estimates, iota_vertex, special_pair_class, BoundCase, BoundReport, HatEstimates, Pattern,
    SpecialCase, SpecialClass, PATTERNS,
};
pub use grid::{entry, Factor, Term, GRID};
pub use matrix::{assemble, SpliceMatrix};

#[derive(Debug, Error)]
pub enum SpliceError {
    #[error(transparent)]
    Blocks(#[from] BlockError),
    /// A block of the grid has the wrong shape for the given packages.
    #[error("grid entry ({}, {}): {detail}", row + 1, col + 1)]
    Shape { row: usize, col: usize, detail: String },
    #[error("grid entry ({}, {}) is malformed: {detail}", row + 1, col + 1)]
    Transcription { row: usize, col: usize, detail: String },
    /// A hypothesis of a bound is not met; names the failing matrix.
    #[error("hypothesis not met: {matrix} is not {required}")]
    Hypothesis { matrix: String, required: &'static str },
}

/// Rank of Floer homology of the splice of two knots.
pub fn splice_rank(first: &KnotComplex, second: &KnotComplex) -> Result<usize, SpliceError> {
    let first = blocks::normalize(first)?;
    let second = blocks::normalize(second)?;
    Ok(assemble(&first, &second)?.i())
}
