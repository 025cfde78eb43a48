//! Dense row-major bit-packed matrices over F₂.

use std::fmt;
use std::ops::{Add, Mul};

use crate::vector::{words_for, F2Vector, WORD_BITS};

/// A dense matrix over F₂ with rows packed into 64-bit words.
///
/// Matrices act on column vectors: an `m × n` matrix maps `F₂ⁿ → F₂ᵐ`.
/// Zero-sized shapes are ordinary values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for idx in 0..n {
            m.set(idx, idx, true);
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if entry(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds an `rows × cols` matrix from row-major 0/1 entries.
    pub fn from_bits(rows: usize, cols: usize, bits: &[u8]) -> Self {
        assert_eq!(bits.len(), rows * cols, "expected {} entries, got {}", rows * cols, bits.len());
        Self::from_fn(rows, cols, |r, c| bits[r * cols + c] & 1 == 1)
    }

    /// Builds a matrix from equal-length rows of 0/1 entries; `cols` fixes
    /// the width when there are no rows.
    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "row {r} has {} entries, expected {cols}", row.len());
            for (c, &bit) in row.iter().enumerate() {
                if bit & 1 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[F2Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {c} has length {}, expected {rows}", col.len());
            for r in col.ones() {
                m.set(r, c, true);
            }
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_row_vectors(cols: usize, rows: &[F2Vector]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row {r} has length {}, expected {cols}", row.len());
            m.row_words_mut(r).copy_from_slice(row.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.check_index(row, col);
        (self.data[row * self.stride + col / WORD_BITS] >> (col % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.check_index(row, col);
        let word = &mut self.data[row * self.stride + col / WORD_BITS];
        let mask = 1u64 << (col % WORD_BITS);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    pub fn toggle(&mut self, row: usize, col: usize) {
        self.check_index(row, col);
        self.data[row * self.stride + col / WORD_BITS] ^= 1u64 << (col % WORD_BITS);
    }

    fn check_index(&self, row: usize, col: usize) {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
    }

    pub(crate) fn row_words(&self, row: usize) -> &[u64] {
        &self.data[row * self.stride..(row + 1) * self.stride]
    }

    pub(crate) fn row_words_mut(&mut self, row: usize) -> &mut [u64] {
        &mut self.data[row * self.stride..(row + 1) * self.stride]
    }

    /// Adds row `src` into row `dst`.
    pub(crate) fn add_row(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let stride = self.stride;
        let (lo, hi) = (src.min(dst), src.max(dst));
        let (head, tail) = self.data.split_at_mut(hi * stride);
        let lo_row = &mut head[lo * stride..(lo + 1) * stride];
        let hi_row = &mut tail[..stride];
        if src < dst {
            for (d, s) in hi_row.iter_mut().zip(lo_row.iter()) {
                *d ^= *s;
            }
        } else {
            for (d, s) in lo_row.iter_mut().zip(hi_row.iter()) {
                *d ^= *s;
            }
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn row(&self, row: usize) -> F2Vector {
        assert!(row < self.rows, "row {row} out of range");
        F2Vector::from_words(self.cols, self.row_words(row).to_vec())
    }

    pub fn column(&self, col: usize) -> F2Vector {
        assert!(col < self.cols, "column {col} out of range");
        F2Vector::from_ones(self.rows, (0..self.rows).filter(|&r| self.get(r, col)))
    }

    pub fn columns(&self) -> Vec<F2Vector> {
        let t = self.transpose();
        (0..self.cols).map(|c| t.row(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Positions `(row, col)` of nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize)> {
        (0..self.rows).flat_map(|r| self.row(r).ones().map(move |c| (r, c)).collect::<Vec<_>>()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row(r).ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix product `self · other`.
    ///
    /// Panics on an inner-dimension mismatch.
    pub fn mul_matrix(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            let out_row = r * out.stride;
            for k in row.ones() {
                let src = other.row_words(k);
                for (d, s) in out.data[out_row..out_row + out.stride].iter_mut().zip(src) {
                    *d ^= *s;
                }
            }
        }
        out
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(
            self.cols,
            v.len(),
            "cannot apply {}x{} matrix to vector of length {}",
            self.rows,
            self.cols,
            v.len()
        );
        let mut out = F2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let parity: u32 = self.row_words(r).iter().zip(v.words()).map(|(a, b)| (a & b).count_ones()).sum();
            if parity % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Entrywise sum.
    pub fn add_matrix(&self, other: &F2Matrix) -> F2Matrix {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &F2Matrix) {
        assert_eq!(self.shape(), other.shape(), "cannot add {:?} and {:?} matrices", self.shape(), other.shape());
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= *b;
        }
    }

    /// `self^exponent` for a square matrix; `self^0` is the identity.
    pub fn pow(&self, exponent: usize) -> F2Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = F2Matrix::identity(self.rows);
        for _ in 0..exponent {
            result = result.mul_matrix(self);
        }
        result
    }

    /// Copies the block of rows `row_start..row_start+rows` and columns
    /// `col_start..col_start+cols`.
    pub fn submatrix(&self, row_start: usize, rows: usize, col_start: usize, cols: usize) -> F2Matrix {
        assert!(row_start + rows <= self.rows && col_start + cols <= self.cols, "submatrix out of range");
        F2Matrix::from_fn(rows, cols, |r, c| self.get(row_start + r, col_start + c))
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn paste(&mut self, row: usize, col: usize, block: &F2Matrix) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols, "block does not fit");
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(row + r, col + c, block.get(r, c));
            }
        }
    }

    /// Selects the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> F2Matrix {
        F2Matrix::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = F2Matrix::zeros(self.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(0, self.cols, other);
        out
    }

    /// Vertical concatenation of `self` above `other`.
    pub fn vstack(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut out = F2Matrix::zeros(self.rows + other.rows, self.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, 0, other);
        out
    }

    /// Block-diagonal matrix with the given blocks.
    pub fn block_diagonal(blocks: &[F2Matrix]) -> F2Matrix {
        let rows = blocks.iter().map(F2Matrix::rows).sum();
        let cols = blocks.iter().map(F2Matrix::cols).sum();
        let mut out = F2Matrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for block in blocks {
            out.paste(r, c, block);
            r += block.rows;
            c += block.cols;
        }
        out
    }

    /// Kronecker product with the left factor outer: entry
    /// `((i₁·p + i₂), (j₁·q + j₂)) = self[i₁][j₁] · other[i₂][j₂]` where
    /// `other` is `p × q`.
    pub fn kron(&self, other: &F2Matrix) -> F2Matrix {
        let (p, q) = other.shape();
        let mut out = F2Matrix::zeros(self.rows * p, self.cols * q);
        for (i1, j1) in self.nonzero_entries() {
            out.paste(i1 * p, j1 * q, other);
        }
        out
    }
}

impl Add for &F2Matrix {
    type Output = F2Matrix;
    fn add(self, rhs: &F2Matrix) -> F2Matrix {
        self.add_matrix(rhs)
    }
}

impl Mul for &F2Matrix {
    type Output = F2Matrix;
    fn mul(self, rhs: &F2Matrix) -> F2Matrix {
        self.mul_matrix(rhs)
    }
}

impl Mul<&F2Vector> for &F2Matrix {
    type Output = F2Vector;
    fn mul(self, rhs: &F2Vector) -> F2Vector {
        self.mul_vec(rhs)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
