//! Injectivity and surjectivity of the off-diagonal blocks.

use f2linalg::{rank, F2Matrix};

use bypass::Vertex;

use crate::data::BlockData;

/// Rank data of one matrix. Empty matrices count as both injective and surjective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixClass {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
    pub full_rank: bool,
    /// `dim ker`
    pub k: usize,
    /// `dim coker`
    pub c: usize,
}

impl MatrixClass {
    pub fn of(matrix: &F2Matrix) -> Self {
        let (rows, cols) = matrix.shape();
        let rank = rank(matrix);
        let empty = rows == 0 || cols == 0;
        let injective = empty || rank == cols;
        let surjective = empty || rank == rows;
        Self {
            rows,
            cols,
            rank,
            injective,
            surjective,
            full_rank: injective || surjective,
            k: cols - rank,
            c: rows - rank,
        }
    }
}

/// Classification of `B_0`, `B_1`, `B_∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub zero: MatrixClass,
    pub one: MatrixClass,
    pub infinity: MatrixClass,
    pub full_rank: bool,
}

impl Classification {
    pub fn get(&self, vertex: Vertex) -> &MatrixClass {
        match vertex {
            Vertex::Zero => &self.zero,
            Vertex::One => &self.one,
            Vertex::Infinity => &self.infinity,
        }
    }
}

pub fn classify(blocks: &BlockData) -> Classification {
    let zero = MatrixClass::of(&blocks.zero.b);
    let one = MatrixClass::of(&blocks.one.b);
    let infinity = MatrixClass::of(&blocks.infinity.b);
    Classification { zero, one, infinity, full_rank: zero.full_rank && one.full_rank && infinity.full_rank }
}
