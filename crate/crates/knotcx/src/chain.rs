//! Finite based chain complexes over F₂ whose basis elements are labels `[x,i,j]`.

use std::collections::HashMap;

use f2linalg::{F2Matrix, F2Vector, Homology};

/// A label `[x,i,j]` with `x` a generator index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub generator: usize,
    pub i: i64,
    pub j: i64,
}

impl Label {
    pub fn new(generator: usize, i: i64, j: i64) -> Self {
        Self { generator, i, j }
    }
}

/// Which summand of a cone a cell belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Piece {
    /// A cell of an ordinary stratum.
    Plain,
    /// The `C{i≤s, j=0}` summand of a surgery cone.
    A,
    /// The `C{i=0, j≤n−s−1}` summand of a surgery cone.
    B,
    /// The `C{j=0}` target summand of a surgery cone.
    T,
}

impl Piece {
    pub fn as_str(self) -> &'static str {
        match self {
            Piece::Plain => "plain",
            Piece::A => "A",
            Piece::B => "B",
            Piece::T => "T",
        }
    }
}

/// A basis element: a label tagged with its summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub piece: Piece,
    pub label: Label,
}

impl Cell {
    pub fn plain(label: Label) -> Self {
        Self { piece: Piece::Plain, label }
    }

    pub fn new(piece: Piece, label: Label) -> Self {
        Self { piece, label }
    }
}

/// A based complex; column `c` of the boundary is `∂(cell c)`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    cells: Vec<Cell>,
    boundary: F2Matrix,
    index: HashMap<Cell, usize>,
}

impl ChainComplex {
    /// Builds a complex. Panics if the boundary is not square of the basis size
    /// or a cell repeats.
    pub fn new(cells: Vec<Cell>, boundary: F2Matrix) -> Self {
        assert_eq!(boundary.shape(), (cells.len(), cells.len()), "boundary must be square on the basis");
        let mut index = HashMap::with_capacity(cells.len());
        for (idx, cell) in cells.iter().enumerate() {
            assert!(index.insert(*cell, idx).is_none(), "repeated cell {cell:?}");
        }
        Self { cells, boundary, index }
    }

    /// Builds a complex from a cell list and boundary entries `(source, target)`.
    pub fn from_entries(cells: Vec<Cell>, entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut boundary = F2Matrix::zeros(cells.len(), cells.len());
        for (source, target) in entries {
            boundary.toggle(target, source);
        }
        Self::new(cells, boundary)
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), F2Matrix::zeros(0, 0))
    }

    pub fn dim(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn boundary(&self) -> &F2Matrix {
        &self.boundary
    }

    pub fn position(&self, cell: &Cell) -> Option<usize> {
        self.index.get(cell).copied()
    }

    /// Checks `∂² = 0`.
    pub fn squares_to_zero(&self) -> bool {
        (&self.boundary * &self.boundary).is_zero()
    }

    /// Checks that every label satisfies `s(x) − i + j = 0`.
    pub fn labels_graded(&self, grading: impl Fn(usize) -> i64) -> bool {
        self.cells.iter().all(|c| grading(c.label.generator) - c.label.i + c.label.j == 0)
    }

    pub fn homology(&self) -> Homology {
        Homology::new(&self.boundary)
    }

    /// `dim − 2·rank ∂`.
    pub fn homology_rank(&self) -> usize {
        self.dim() - 2 * f2linalg::rank(&self.boundary)
    }

    /// The same cells retagged with `piece`.
    pub fn retag(&self, piece: Piece) -> Self {
        let cells = self.cells.iter().map(|c| Cell::new(piece, c.label)).collect();
        Self::new(cells, self.boundary.clone())
    }

    /// Indicator vector of a set of cells; panics on an unknown cell.
    pub fn vector_of<'a>(&self, cells: impl IntoIterator<Item = &'a Cell>) -> F2Vector {
        let mut v = F2Vector::zeros(self.dim());
        for cell in cells {
            v.toggle(self.position(cell).unwrap_or_else(|| panic!("cell {cell:?} not in complex")));
        }
        v
    }
}

/// A linear map between based complexes; `matrix` is target-dim × source-dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub matrix: F2Matrix,
}

impl ChainMap {
    pub fn new(matrix: F2Matrix) -> Self {
        Self { matrix }
    }

    /// Sends each source cell to the target cell chosen by `map`, or to zero on `None`.
    /// Panics if a chosen cell is missing from the target.
    pub fn from_cell_map(source: &ChainComplex, target: &ChainComplex, map: impl Fn(&Cell) -> Option<Cell>) -> Self {
        let mut matrix = F2Matrix::zeros(target.dim(), source.dim());
        for (col, cell) in source.cells().iter().enumerate() {
            if let Some(image) = map(cell) {
                let row =
                    target.position(&image).unwrap_or_else(|| panic!("image {image:?} of {cell:?} not in target"));
                matrix.toggle(row, col);
            }
        }
        Self { matrix }
    }

    /// Checks `f∘∂_source = ∂_target∘f`.
    pub fn is_chain_map(&self, source: &ChainComplex, target: &ChainComplex) -> bool {
        self.matrix.shape() == (target.dim(), source.dim())
            && &self.matrix * source.boundary() == target.boundary() * &self.matrix
    }

    pub fn compose(&self, first: &ChainMap) -> ChainMap {
        ChainMap::new(&self.matrix * &first.matrix)
    }
}
