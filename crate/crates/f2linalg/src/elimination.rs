//! Gaussian elimination: rank profiles, kernels, images, inverses and
//! linear solves. Pivots always use the lowest-index available column.

use crate::matrix::F2Matrix;
use crate::vector::F2Vector;

/// Rank together with kernel and cokernel dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RankProfile {
    pub rank: usize,
    /// Kernel dimension, `cols − rank`.
    pub k: usize,
    /// Cokernel dimension, `rows − rank`.
    pub c: usize,
    /// `k + c`.
    pub i: usize,
}

impl RankProfile {
    pub fn new(rows: usize, cols: usize, rank: usize) -> Self {
        let k = cols - rank;
        let c = rows - rank;
        Self { rank, k, c, i: k + c }
    }
}

/// Reduced row echelon form of a matrix with the row operations recorded.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// The reduced matrix `R = T · M`.
    pub reduced: F2Matrix,
    /// Invertible transform `T` with `T · M = R`.
    pub transform: F2Matrix,
    /// Pivot column of each of the first `rank` rows of `R`, ascending.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduced row echelon form with the row transform.
pub fn echelon(matrix: &F2Matrix) -> Echelon {
    let rows = matrix.rows();
    let mut reduced = matrix.clone();
    let mut transform = F2Matrix::identity(rows);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..matrix.cols() {
        if next_row == rows {
            break;
        }
        let Some(pivot_row) = (next_row..rows).find(|&r| reduced.get(r, col)) else {
            continue;
        };
        reduced.swap_rows(pivot_row, next_row);
        transform.swap_rows(pivot_row, next_row);
        for r in 0..rows {
            if r != next_row && reduced.get(r, col) {
                reduced.add_row(next_row, r);
                transform.add_row(next_row, r);
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    Echelon { reduced, transform, pivots }
}

/// Rank by forward elimination.
pub fn rank(matrix: &F2Matrix) -> usize {
    let rows = matrix.rows();
    let mut work = matrix.clone();
    let mut next_row = 0;
    for col in 0..matrix.cols() {
        if next_row == rows {
            break;
        }
        let Some(pivot_row) = (next_row..rows).find(|&r| work.get(r, col)) else {
            continue;
        };
        work.swap_rows(pivot_row, next_row);
        for r in next_row + 1..rows {
            if work.get(r, col) {
                work.add_row(next_row, r);
            }
        }
        next_row += 1;
    }
    next_row
}

/// Rank, kernel, cokernel and index of a matrix.
pub fn rank_profile(matrix: &F2Matrix) -> RankProfile {
    RankProfile::new(matrix.rows(), matrix.cols(), rank(matrix))
}

/// A kernel basis: one vector per free column, free columns taken in
/// ascending order, each with a one in its own free position.
pub fn kernel_basis(matrix: &F2Matrix) -> Vec<F2Vector> {
    let ech = echelon(matrix);
    let cols = matrix.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = F2Vector::unit(cols, free);
            for (r, &p) in ech.pivots.iter().enumerate() {
                if ech.reduced.get(r, free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

/// A basis of the column space: the pivot columns of the original matrix.
pub fn image_basis(matrix: &F2Matrix) -> Vec<F2Vector> {
    echelon(matrix).pivots.iter().map(|&c| matrix.column(c)).collect()
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(matrix: &F2Matrix) -> Option<F2Matrix> {
    if !matrix.is_square() {
        return None;
    }
    let ech = echelon(matrix);
    (ech.rank() == matrix.rows()).then_some(ech.transform)
}

pub fn is_invertible(matrix: &F2Matrix) -> bool {
    matrix.is_square() && rank(matrix) == matrix.rows()
}

/// Reusable solver for `M · x = b` with fixed `M`.
#[derive(Clone, Debug)]
pub struct Solver {
    ech: Echelon,
    cols: usize,
}

impl Solver {
    pub fn new(matrix: &F2Matrix) -> Self {
        Self { ech: echelon(matrix), cols: matrix.cols() }
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    /// A solution of `M · x = b` with zeros in all free positions, or
    /// `None` if `b` is outside the column space.
    pub fn solve(&self, rhs: &F2Vector) -> Option<F2Vector> {
        let y = self.ech.transform.mul_vec(rhs);
        if y.ones().any(|r| r >= self.rank()) {
            return None;
        }
        Some(F2Vector::from_ones(self.cols, y.ones().map(|r| self.ech.pivots[r])))
    }

    /// Whether `b` lies in the column space.
    pub fn contains(&self, rhs: &F2Vector) -> bool {
        self.solve(rhs).is_some()
    }
}

/// Greedy selection: indices of the vectors that are independent of the
/// span of `base` and of the earlier selected vectors, scanned in order.
pub fn greedy_independent(base: &[F2Vector], candidates: &[F2Vector], len: usize) -> Vec<usize> {
    let mut span = IncrementalSpan::new(len);
    for v in base {
        span.insert(v.clone());
    }
    candidates.iter().enumerate().filter_map(|(idx, v)| span.insert(v.clone()).then_some(idx)).collect()
}

/// Span maintained in echelon form keyed by leading position.
#[derive(Clone, Debug)]
pub struct IncrementalSpan {
    len: usize,
    rows: Vec<(usize, F2Vector)>,
}

impl IncrementalSpan {
    pub fn new(len: usize) -> Self {
        Self { len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: F2Vector) -> F2Vector {
        for (lead, row) in &self.rows {
            if v.get(*lead) {
                v.add_assign(row);
            }
        }
        v
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &F2Vector) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: F2Vector) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let reduced = self.reduce(v);
        match reduced.first_one() {
            None => false,
            Some(lead) => {
                for (_, row) in &mut self.rows {
                    if row.get(lead) {
                        row.add_assign(&reduced);
                    }
                }
                self.rows.push((lead, reduced));
                true
            }
        }
    }
}
