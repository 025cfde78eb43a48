//! Mapping cones `M(i_n^s)` and the ranks of their homology.

use f2linalg::F2Matrix;
use knotcx::{flip_cell, strata, Cell, ChainComplex, KnotComplex, Label, Piece, Stratum};

/// The cone of `i_n^s : A ⊕ B → T` with its three summands.
#[derive(Clone, Debug)]
pub struct SurgeryCone {
    pub n: u32,
    pub s: i64,
    /// `C{i≤s, j=0}`
    pub a: ChainComplex,
    /// `C{i=0, j≤n−s−1}`
    pub b: ChainComplex,
    /// `C{j=0}`
    pub t: ChainComplex,
    /// Basis `A ⊔ B ⊔ T`, cells tagged by summand.
    pub cone: ChainComplex,
}

impl SurgeryCone {
    /// The summand sizes `(dim A, dim B, dim T)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a.dim(), self.b.dim(), self.t.dim())
    }

    /// The cross map `i_n^s` as a `dim T × (dim A + dim B)` matrix.
    pub fn cross_map(&self) -> F2Matrix {
        let (a, b, t) = self.dims();
        self.cone.boundary().submatrix(a + b, t, 0, a + b)
    }
}

/// Builds `M(i_n^s)`: inclusion on `A`, the flip on `B`.
pub fn build_cone(knot: &KnotComplex, n: u32, s: i64) -> SurgeryCone {
    let a = strata(knot, Stratum::ColumnBelow { i_max: s, j: 0 });
    let b = strata(knot, Stratum::RowBelow { i: 0, j_max: i64::from(n) - s - 1 });
    let t = strata(knot, Stratum::Horizontal { j: 0 });
    let cone = assemble_cone(knot, &a, &b, &t);
    SurgeryCone { n, s, a, b, t, cone }
}

fn assemble_cone(knot: &KnotComplex, a: &ChainComplex, b: &ChainComplex, t: &ChainComplex) -> ChainComplex {
    let (da, db, dt) = (a.dim(), b.dim(), t.dim());
    let total = da + db + dt;
    let mut cells = Vec::with_capacity(total);
    cells.extend(a.cells().iter().map(|c| Cell::new(Piece::A, c.label)));
    cells.extend(b.cells().iter().map(|c| Cell::new(Piece::B, c.label)));
    cells.extend(t.cells().iter().map(|c| Cell::new(Piece::T, c.label)));
    let mut boundary = F2Matrix::zeros(total, total);
    boundary.paste(0, 0, a.boundary());
    boundary.paste(da, da, b.boundary());
    boundary.paste(da + db, da + db, t.boundary());
    for (col, cell) in a.cells().iter().enumerate() {
        let row = t.position(cell).expect("A labels lie in C{j=0}");
        boundary.set(da + db + row, col, true);
    }
    for (col, cell) in b.cells().iter().enumerate() {
        let image = flip_cell(knot, cell.label);
        let row = t.position(&image).expect("flip lands in C{j=0}");
        boundary.set(da + db + row, da + col, true);
    }
    ChainComplex::new(cells, boundary)
}

/// Rank of the homology of `M(i_n^s)`.
pub fn h_n(knot: &KnotComplex, n: u32, s: i64) -> usize {
    build_cone(knot, n, s).cone.homology_rank()
}

/// Rank of knot Floer homology in grading `s`, from `C{i=0, j=−s}`.
pub fn hfk(knot: &KnotComplex, s: i64) -> usize {
    knot.hfk_rank(s)
}

/// `C{i=s, j=0}` with its induced differential.
pub fn c_infinity(knot: &KnotComplex, s: i64) -> ChainComplex {
    strata(knot, Stratum::Point { i: s, j: 0 })
}

/// The label `[x,s,0]` in `C{i=s, j=0}` matching `[x,0,−s]`.
pub fn infinity_label(label: Label) -> Label {
    Label::new(label.generator, -label.j, 0)
}

/// Per-grading homology ranks of the `n`-surgery cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryProfile {
    pub n: u32,
    pub ranks: Vec<(i64, usize)>,
}

impl SurgeryProfile {
    pub fn total(&self) -> usize {
        self.ranks.iter().map(|&(_, r)| r).sum()
    }

    /// Ranks restricted to gradings in `lo..=hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<usize> {
        (lo..=hi).map(|s| self.ranks.iter().find(|&&(t, _)| t == s).map_or(0, |&(_, r)| r)).collect()
    }
}

/// Ranks over `s ∈ [−g−1, g+n+1]`, which covers every nonzero group.
pub fn profile(knot: &KnotComplex, n: u32) -> SurgeryProfile {
    let g = knot.genus() as i64;
    let ranks = (-g - 1..=g + i64::from(n) + 1).map(|s| (s, h_n(knot, n, s))).collect();
    SurgeryProfile { n, ranks }
}
