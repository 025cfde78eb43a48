//! Homology of a finite based complex with a fixed, deterministic basis of
//! representative cycles.

use thiserror::Error;

use crate::elimination::{greedy_independent, image_basis, kernel_basis, Solver};
use crate::matrix::F2Matrix;
use crate::vector::F2Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("vector is not a cycle")]
    NotACycle,
    #[error("map of shape {map_rows}x{map_cols} does not fit complexes of dimension {source_dim} -> {target_dim}")]
    ShapeMismatch { map_rows: usize, map_cols: usize, source_dim: usize, target_dim: usize },
}

/// Homology of `(F₂ⁿ, ∂)` with `∂² = 0`.
///
/// Representatives are the kernel basis vectors (free columns ascending)
/// that are independent of the boundaries and of earlier choices.
#[derive(Clone, Debug)]
pub struct Homology {
    boundary: F2Matrix,
    representatives: Vec<F2Vector>,
    image_dim: usize,
    solver: Solver,
}

impl Homology {
    /// Panics if `boundary` is not square.
    pub fn new(boundary: &F2Matrix) -> Self {
        assert!(boundary.is_square(), "boundary must be square, got {:?}", boundary.shape());
        let dim = boundary.rows();
        let image = image_basis(boundary);
        let cycles = kernel_basis(boundary);
        let chosen = greedy_independent(&image, &cycles, dim);
        let representatives: Vec<F2Vector> = chosen.into_iter().map(|idx| cycles[idx].clone()).collect();
        let mut columns = image.clone();
        columns.extend(representatives.iter().cloned());
        let solver = Solver::new(&F2Matrix::from_columns(dim, &columns));
        Self { boundary: boundary.clone(), representatives, image_dim: image.len(), solver }
    }

    /// Dimension of the underlying chain space.
    pub fn chain_dim(&self) -> usize {
        self.boundary.rows()
    }

    /// Rank of homology.
    pub fn rank(&self) -> usize {
        self.representatives.len()
    }

    pub fn boundary(&self) -> &F2Matrix {
        &self.boundary
    }

    pub fn representatives(&self) -> &[F2Vector] {
        &self.representatives
    }

    pub fn is_cycle(&self, v: &F2Vector) -> bool {
        self.boundary.mul_vec(v).is_zero()
    }

    pub fn is_boundary(&self, v: &F2Vector) -> bool {
        self.class_of(v).map(|c| c.is_zero()).unwrap_or(false)
    }

    /// Coordinates of the class of cycle `v` in the representative basis.
    pub fn class_of(&self, v: &F2Vector) -> Result<F2Vector, HomologyError> {
        if !self.is_cycle(v) {
            return Err(HomologyError::NotACycle);
        }
        let coords = self.solver.solve(v).ok_or(HomologyError::NotACycle)?;
        Ok(coords.slice(self.image_dim, self.rank()))
    }

    /// The representative cycle of a class given in coordinates.
    pub fn cycle_of(&self, class: &F2Vector) -> F2Vector {
        assert_eq!(class.len(), self.rank(), "class has wrong length");
        let mut v = F2Vector::zeros(self.chain_dim());
        for idx in class.ones() {
            v.add_assign(&self.representatives[idx]);
        }
        v
    }
}

/// Matrix of the map induced on homology by a chain map.
pub fn induced_map(map: &F2Matrix, source: &Homology, target: &Homology) -> Result<F2Matrix, HomologyError> {
    if map.cols() != source.chain_dim() || map.rows() != target.chain_dim() {
        return Err(HomologyError::ShapeMismatch {
            map_rows: map.rows(),
            map_cols: map.cols(),
            source_dim: source.chain_dim(),
            target_dim: target.chain_dim(),
        });
    }
    let columns =
        source.representatives().iter().map(|rep| target.class_of(&map.mul_vec(rep))).collect::<Result<Vec<_>, _>>()?;
    Ok(F2Matrix::from_columns(target.rank(), &columns))
}
