//! Block decompositions of the three duality maps.

use f2linalg::F2Matrix;

use bypass::{nilpotency_index, Vertex};

use crate::BlockError;

/// `τ = [[A, B], [C, D]]` for one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    pub a: F2Matrix,
    pub b: F2Matrix,
    pub c: F2Matrix,
    pub d: F2Matrix,
}

impl Blocks {
    fn slice(tau: &F2Matrix, top: usize, bottom: usize) -> Self {
        Self {
            a: tau.submatrix(0, top, 0, top),
            b: tau.submatrix(0, top, top, bottom),
            c: tau.submatrix(top, bottom, 0, top),
            d: tau.submatrix(top, bottom, top, bottom),
        }
    }
}

/// The normalized homology package of a knot: ranks `a_v` of `f_v`, the
/// duality maps in bases where every `f_v` is `[[0,0],[I,0]]`, their blocks
/// and the triple products `X_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockData {
    pub a0: usize,
    pub a1: usize,
    pub ainf: usize,
    pub tau0: F2Matrix,
    pub tau1: F2Matrix,
    pub tauinf: F2Matrix,
    pub zero: Blocks,
    pub one: Blocks,
    pub infinity: Blocks,
    /// `B_1 B_0 B_∞`
    pub x0: F2Matrix,
    /// `B_∞ B_1 B_0`
    pub x1: F2Matrix,
    /// `B_0 B_∞ B_1`
    pub xinf: F2Matrix,
}

/// A knot-level law that the data violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawFailure {
    Parity { a0: usize, a1: usize, ainf: usize },
    NotNilpotent { vertex: &'static str },
}

impl std::fmt::Display for LawFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LawFailure::Parity { a0, a1, ainf } => {
                write!(f, "parity law fails: a0={a0}, a1={a1}, ainf={ainf}")
            }
            LawFailure::NotNilpotent { vertex } => write!(f, "X_{vertex} is not nilpotent"),
        }
    }
}

impl BlockData {
    /// Two-block split `(top, bottom)` of `ℍ_v`.
    pub fn split(a0: usize, a1: usize, ainf: usize, vertex: Vertex) -> (usize, usize) {
        match vertex {
            Vertex::Zero => (ainf, a1),
            Vertex::One => (a0, ainf),
            Vertex::Infinity => (a1, a0),
        }
    }

    /// Slices the three duality maps and checks shapes and `τ² = Id`.
    pub fn from_taus(
        a0: usize,
        a1: usize,
        ainf: usize,
        tau0: F2Matrix,
        tau1: F2Matrix,
        tauinf: F2Matrix,
    ) -> Result<Self, BlockError> {
        let mut sliced = Vec::with_capacity(3);
        for (vertex, tau) in [(Vertex::Zero, &tau0), (Vertex::One, &tau1), (Vertex::Infinity, &tauinf)] {
            let (top, bottom) = Self::split(a0, a1, ainf, vertex);
            if tau.shape() != (top + bottom, top + bottom) {
                return Err(BlockError::Shape {
                    what: format!("tau_{}", vertex.name()),
                    expected: (top + bottom, top + bottom),
                    actual: tau.shape(),
                });
            }
            if !(tau * tau).is_identity() {
                return Err(BlockError::TauNotInvolution { vertex: vertex.name() });
            }
            sliced.push(Blocks::slice(tau, top, bottom));
        }
        let infinity = sliced.pop().unwrap();
        let one = sliced.pop().unwrap();
        let zero = sliced.pop().unwrap();
        let x0 = &(&one.b * &zero.b) * &infinity.b;
        let x1 = &(&infinity.b * &one.b) * &zero.b;
        let xinf = &(&zero.b * &infinity.b) * &one.b;
        Ok(Self { a0, a1, ainf, tau0, tau1, tauinf, zero, one, infinity, x0, x1, xinf })
    }

    pub fn blocks(&self, vertex: Vertex) -> &Blocks {
        match vertex {
            Vertex::Zero => &self.zero,
            Vertex::One => &self.one,
            Vertex::Infinity => &self.infinity,
        }
    }

    pub fn tau(&self, vertex: Vertex) -> &F2Matrix {
        match vertex {
            Vertex::Zero => &self.tau0,
            Vertex::One => &self.tau1,
            Vertex::Infinity => &self.tauinf,
        }
    }

    pub fn x(&self, vertex: Vertex) -> &F2Matrix {
        match vertex {
            Vertex::Zero => &self.x0,
            Vertex::One => &self.x1,
            Vertex::Infinity => &self.xinf,
        }
    }

    pub fn a(&self, vertex: Vertex) -> usize {
        match vertex {
            Vertex::Zero => self.a0,
            Vertex::One => self.a1,
            Vertex::Infinity => self.ainf,
        }
    }

    /// Smallest `p ≥ 1` with `X_v^p = 0`, if any.
    pub fn x_nilpotency(&self, vertex: Vertex) -> Option<usize> {
        let x = self.x(vertex);
        nilpotency_index(x, x.rows() + 1)
    }

    /// Parity of the `a_v` and nilpotency of each `X_v`.
    pub fn law_failures(&self) -> Vec<LawFailure> {
        let mut failures = Vec::new();
        if self.a1 % 2 != self.ainf % 2 || self.a1 % 2 == self.a0 % 2 {
            failures.push(LawFailure::Parity { a0: self.a0, a1: self.a1, ainf: self.ainf });
        }
        for vertex in Vertex::ALL {
            if self.x_nilpotency(vertex).is_none() {
                failures.push(LawFailure::NotNilpotent { vertex: vertex.name() });
            }
        }
        failures
    }

    /// `[[0,0],[I,0]]` from `ℍ_source` (split `(cols_top, cols_bottom)`) to `ℍ_target`.
    pub fn standard_f(rows_top: usize, rows_bottom: usize, cols_top: usize, cols_bottom: usize) -> F2Matrix {
        let mut m = F2Matrix::zeros(rows_top + rows_bottom, cols_top + cols_bottom);
        assert_eq!(rows_bottom, cols_top, "standard form needs matching identity block");
        m.paste(rows_top, 0, &F2Matrix::identity(cols_top));
        m
    }

    /// The normalized `f_∞ : ℍ_0 → ℍ_1`, `f_0 : ℍ_1 → ℍ_∞` and `f_1 : ℍ_∞ → ℍ_0`.
    pub fn standard_maps(&self) -> [F2Matrix; 3] {
        let (a0, a1, ainf) = (self.a0, self.a1, self.ainf);
        [Self::standard_f(a0, ainf, ainf, a1), Self::standard_f(a1, a0, a0, ainf), Self::standard_f(ainf, a1, a1, a0)]
    }
}
