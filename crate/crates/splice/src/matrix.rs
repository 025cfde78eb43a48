//! Assembly of the splice matrix from two block packages.

use f2linalg::{block_assemble, kron, rank_profile, AssembleError, F2Matrix, RankProfile};

use blocks::BlockData;

use crate::grid::{Factor, Term, GRID};
use crate::SpliceError;

/// The assembled matrix with its block dimensions and rank profile.
#[derive(Clone, Debug)]
pub struct SpliceMatrix {
    pub matrix: F2Matrix,
    pub row_dims: [usize; 6],
    pub col_dims: [usize; 6],
    pub profile: RankProfile,
}

impl SpliceMatrix {
    /// `k + c`, the rank of Floer homology of the splice.
    pub fn i(&self) -> usize {
        self.profile.i
    }
}

fn factor_matrix(blocks: &BlockData, factor: Factor) -> Option<&F2Matrix> {
    Some(match factor {
        Factor::I => return None,
        Factor::A(v) => &blocks.blocks(v).a,
        Factor::B(v) => &blocks.blocks(v).b,
        Factor::C(v) => &blocks.blocks(v).c,
        Factor::D(v) => &blocks.blocks(v).d,
        Factor::X(v) => blocks.x(v),
    })
}

/// Product of one side of a term; `None` for a bare identity.
fn side_product(
    blocks: &BlockData,
    factors: &[Factor],
    position: (usize, usize),
    side: &'static str,
) -> Result<Option<F2Matrix>, SpliceError> {
    let mut product: Option<F2Matrix> = None;
    for &factor in factors {
        let Some(next) = factor_matrix(blocks, factor) else {
            if factors.len() != 1 {
                return Err(SpliceError::Transcription {
                    row: position.0,
                    col: position.1,
                    detail: format!("identity inside a product on the {side} side"),
                });
            }
            return Ok(None);
        };
        product = Some(match product {
            None => next.clone(),
            Some(acc) => {
                if acc.cols() != next.rows() {
                    return Err(SpliceError::Shape {
                        row: position.0,
                        col: position.1,
                        detail: format!(
                            "{side} product {acc_shape:?} · {factor} {next_shape:?}",
                            acc_shape = acc.shape(),
                            next_shape = next.shape()
                        ),
                    });
                }
                &acc * next
            }
        });
    }
    Ok(product)
}

type Evaluated = (Option<F2Matrix>, Option<F2Matrix>);

fn evaluate(
    first: &BlockData,
    second: &BlockData,
    term: &Term,
    position: (usize, usize),
) -> Result<Evaluated, SpliceError> {
    Ok((side_product(first, term.left, position, "first")?, side_product(second, term.right, position, "second")?))
}

/// Size of a bare identity paired with `other` in a block of shape `(rows, cols)`.
fn identity_size(other: &F2Matrix, rows: usize, cols: usize) -> usize {
    if other.rows() > 0 {
        rows / other.rows()
    } else if other.cols() > 0 {
        cols / other.cols()
    } else {
        0
    }
}

fn term_block(
    evaluated: &Evaluated,
    rows: usize,
    cols: usize,
    position: (usize, usize),
    term: &Term,
) -> Result<F2Matrix, SpliceError> {
    let mismatch = |shape: (usize, usize)| SpliceError::Shape {
        row: position.0,
        col: position.1,
        detail: format!("term {term} has shape {shape:?}, block needs {:?}", (rows, cols)),
    };
    let block = match evaluated {
        (Some(l), Some(r)) => kron(l, r),
        (None, Some(r)) => kron(&F2Matrix::identity(identity_size(r, rows, cols)), r),
        (Some(l), None) => kron(l, &F2Matrix::identity(identity_size(l, rows, cols))),
        (None, None) => {
            if rows != cols {
                return Err(mismatch((rows, rows)));
            }
            F2Matrix::identity(rows)
        }
    };
    if block.shape() != (rows, cols) {
        return Err(mismatch(block.shape()));
    }
    Ok(block)
}

/// Assembles the splice matrix, checking every block shape.
pub fn assemble(first: &BlockData, second: &BlockData) -> Result<SpliceMatrix, SpliceError> {
    let mut evaluated: Vec<Vec<Vec<Evaluated>>> = Vec::with_capacity(6);
    for (r, row) in GRID.iter().enumerate() {
        let mut row_terms = Vec::with_capacity(6);
        for (c, terms) in row.iter().enumerate() {
            let list = terms.iter().map(|t| evaluate(first, second, t, (r, c))).collect::<Result<Vec<_>, _>>()?;
            row_terms.push(list);
        }
        evaluated.push(row_terms);
    }

    // Block dimensions come from terms with no identity factor.
    let mut row_dims = [None; 6];
    let mut col_dims = [None; 6];
    for (r, row) in evaluated.iter().enumerate() {
        for (c, list) in row.iter().enumerate() {
            for (l, rt) in list.iter().filter_map(|(l, r)| l.as_ref().zip(r.as_ref())) {
                row_dims[r].get_or_insert(l.rows() * rt.rows());
                col_dims[c].get_or_insert(l.cols() * rt.cols());
            }
        }
    }
    let row_dims = row_dims.map(|d| d.expect("every row has a term without identities"));
    let col_dims = col_dims.map(|d| d.expect("every column has a term without identities"));

    let mut grid: Vec<Vec<Option<F2Matrix>>> = vec![vec![None; 6]; 6];
    for r in 0..6 {
        for c in 0..6 {
            let mut sum: Option<F2Matrix> = None;
            for (term, ev) in GRID[r][c].iter().zip(&evaluated[r][c]) {
                let block = term_block(ev, row_dims[r], col_dims[c], (r, c), term)?;
                match &mut sum {
                    None => sum = Some(block),
                    Some(acc) => acc.add_assign(&block),
                }
            }
            grid[r][c] = sum;
        }
    }
    let matrix = block_assemble(&grid, &row_dims, &col_dims).map_err(|e| match e {
        AssembleError::DimensionMismatch { row, col, .. } => SpliceError::Shape { row, col, detail: e.to_string() },
        other => SpliceError::Transcription { row: 0, col: 0, detail: other.to_string() },
    })?;
    let profile = rank_profile(&matrix);
    Ok(SpliceMatrix { matrix, row_dims, col_dims, profile })
}
