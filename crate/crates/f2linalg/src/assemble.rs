//! Assembly of a block matrix from a grid of optional blocks.

use thiserror::Error;

use crate::matrix::F2Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssembleError {
    #[error("grid has {actual} block rows, expected {expected}")]
    GridRows { expected: usize, actual: usize },
    #[error("block row {row} has {actual} blocks, expected {expected}")]
    GridCols { row: usize, expected: usize, actual: usize },
    #[error(
        "block ({row}, {col}) has shape {}x{}, expected {}x{}",
        actual.0, actual.1, expected.0, expected.1
    )]
    DimensionMismatch { row: usize, col: usize, expected: (usize, usize), actual: (usize, usize) },
}

/// Concatenates a grid of blocks. Absent blocks are zero; every present
/// block at `(i, j)` must have shape `row_dims[i] × col_dims[j]`.
pub fn block_assemble(
    grid: &[Vec<Option<F2Matrix>>],
    row_dims: &[usize],
    col_dims: &[usize],
) -> Result<F2Matrix, AssembleError> {
    if grid.len() != row_dims.len() {
        return Err(AssembleError::GridRows { expected: row_dims.len(), actual: grid.len() });
    }
    for (row, blocks) in grid.iter().enumerate() {
        if blocks.len() != col_dims.len() {
            return Err(AssembleError::GridCols { row, expected: col_dims.len(), actual: blocks.len() });
        }
        for (col, block) in blocks.iter().enumerate() {
            if let Some(block) = block {
                let expected = (row_dims[row], col_dims[col]);
                if block.shape() != expected {
                    return Err(AssembleError::DimensionMismatch { row, col, expected, actual: block.shape() });
                }
            }
        }
    }
    let total_rows = row_dims.iter().sum();
    let total_cols = col_dims.iter().sum();
    let mut out = F2Matrix::zeros(total_rows, total_cols);
    let mut row_offset = 0;
    for (row, blocks) in grid.iter().enumerate() {
        let mut col_offset = 0;
        for (col, block) in blocks.iter().enumerate() {
            if let Some(block) = block {
                out.paste(row_offset, col_offset, block);
            }
            col_offset += col_dims[col];
        }
        row_offset += row_dims[row];
    }
    Ok(out)
}
