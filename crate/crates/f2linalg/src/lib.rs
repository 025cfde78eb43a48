//! Exact linear algebra over the two-element field F₂.
//!
//! Matrices are dense with bit-packed rows. Elimination always pivots on
//! the lowest-index available column, so every derived basis (kernels,
//! images, homology representatives) is reproducible.

mod assemble;
mod elimination;
mod homology;
mod matrix;
mod vector;

pub use assemble::{block_assemble, AssembleError};
pub use elimination::{
    echelon, greedy_independent, image_basis, inverse, is_invertible, kernel_basis, rank, rank_profile, Echelon,
    IncrementalSpan, RankProfile, Solver,
};
pub use homology::{induced_map, Homology, HomologyError};
pub use matrix::F2Matrix;
pub use vector::F2Vector;

/// Kronecker product `m ⊗ n`, left factor outer.
pub fn kron(m: &F2Matrix, n: &F2Matrix) -> F2Matrix {
    m.kron(n)
}
