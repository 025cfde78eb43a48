//! The 6×6 block grid of the splice matrix as a literal table.
//!
//! Each entry is a sum of terms `L ⊗ R`, where `L` is a product of blocks of
//! the first knot and `R` a product of blocks of the second. A bare `I` is an
//! identity whose size is fixed by the surrounding grid.

use std::fmt;

use bypass::Vertex;

/// One block of a knot's package.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    I,
    A(Vertex),
    B(Vertex),
    C(Vertex),
    D(Vertex),
    X(Vertex),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, v) = match self {
            Factor::I => return write!(f, "I"),
            Factor::A(v) => ("A", v),
            Factor::B(v) => ("B", v),
            Factor::C(v) => ("C", v),
            Factor::D(v) => ("D", v),
            Factor::X(v) => ("X", v),
        };
        write!(f, "{name}_{}", v.name())
    }
}

/// `left ⊗ right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub left: &'static [Factor],
    pub right: &'static [Factor],
}

const fn term(left: &'static [Factor], right: &'static [Factor]) -> Term {
    Term { left, right }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |side: &[Factor]| side.iter().map(Factor::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "{} (x) {}", join(self.left), join(self.right))
    }
}

use Factor::I;
const A0: Factor = Factor::A(Vertex::Zero);
const A1: Factor = Factor::A(Vertex::One);
const AINF: Factor = Factor::A(Vertex::Infinity);
const B0: Factor = Factor::B(Vertex::Zero);
const B1: Factor = Factor::B(Vertex::One);
const BINF: Factor = Factor::B(Vertex::Infinity);
const D0: Factor = Factor::D(Vertex::Zero);
const D1: Factor = Factor::D(Vertex::One);
const DINF: Factor = Factor::D(Vertex::Infinity);
const X1: Factor = Factor::X(Vertex::One);

/// Entries by row, then column. An empty entry is zero.
pub const GRID: [[&[Term]; 6]; 6] = [
    [
        &[term(&[DINF, B1], &[B1, A0])],
        &[term(&[B1, A0], &[I])],
        &[term(&[B1, B0], &[I])],
        &[term(&[DINF, A1], &[B1, A0])],
        &[term(&[I], &[B1, B0])],
        &[],
    ],
    [
        &[term(&[I], &[BINF, B1])],
        &[term(&[D1, A0], &[BINF, A1])],
        &[term(&[D1, B0], &[BINF, A1])],
        &[],
        &[term(&[B0, BINF], &[I])],
        &[term(&[B0, AINF], &[I])],
    ],
    [
        &[term(&[I], &[DINF, B1])],
        &[term(&[I], &[I]), term(&[D1, A0], &[DINF, A1])],
        &[term(&[D1, B0], &[DINF, A1])],
        &[],
        &[],
        &[],
    ],
    [
        &[term(&[BINF, B1], &[I])],
        &[],
        &[term(&[I], &[B0, BINF])],
        &[term(&[BINF, A1], &[I])],
        &[term(&[D0, BINF], &[B0, AINF]), term(&[X1, BINF], &[B0, X1])],
        &[term(&[D0, AINF], &[B0, AINF]), term(&[X1, AINF], &[B0, X1])],
    ],
    [
        &[term(&[DINF, B1], &[D1, A0])],
        &[],
        &[],
        &[term(&[I], &[I]), term(&[DINF, A1], &[D1, A0])],
        &[term(&[I], &[D1, B0])],
        &[],
    ],
    [
        &[],
        &[],
        &[term(&[I], &[D0, BINF])],
        &[],
        &[term(&[D0, BINF], &[D0, AINF]), term(&[X1, BINF], &[D0, X1])],
        &[term(&[I], &[I]), term(&[D0, AINF], &[D0, AINF]), term(&[X1, AINF], &[D0, X1])],
    ],
];

/// The terms at a grid position (zero-based).
pub fn entry(row: usize, col: usize) -> &'static [Term] {
    GRID[row][col]
}
