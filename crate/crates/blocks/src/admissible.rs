//! Admissible changes of basis: those preserving the standard form of every `f_v`.

use f2linalg::{inverse, is_invertible, F2Matrix};
use rand::Rng;

use crate::data::BlockData;
use crate::BlockError;

/// The six matrices of an admissible change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleChange {
    /// `a_0 × a_0`, invertible
    pub p0: F2Matrix,
    /// `a_1 × a_1`, invertible
    pub p1: F2Matrix,
    /// `a_∞ × a_∞`, invertible
    pub pinf: F2Matrix,
    /// `a_1 × a_∞`
    pub y0: F2Matrix,
    /// `a_∞ × a_0`
    pub y1: F2Matrix,
    /// `a_0 × a_1`
    pub yinf: F2Matrix,
}

fn lower_block(diag_top: &F2Matrix, lower: &F2Matrix, diag_bottom: &F2Matrix) -> F2Matrix {
    let top = diag_top.rows();
    let bottom = diag_bottom.rows();
    let mut m = F2Matrix::zeros(top + bottom, top + bottom);
    m.paste(0, 0, diag_top);
    m.paste(top, 0, lower);
    m.paste(top, top, diag_bottom);
    m
}

impl AdmissibleChange {
    pub fn identity(blocks: &BlockData) -> Self {
        let (a0, a1, ainf) = (blocks.a0, blocks.a1, blocks.ainf);
        Self {
            p0: F2Matrix::identity(a0),
            p1: F2Matrix::identity(a1),
            pinf: F2Matrix::identity(ainf),
            y0: F2Matrix::zeros(a1, ainf),
            y1: F2Matrix::zeros(ainf, a0),
            yinf: F2Matrix::zeros(a0, a1),
        }
    }

    /// Uniformly random invertible `P` and arbitrary `Y` of the right sizes.
    pub fn random<R: Rng + ?Sized>(blocks: &BlockData, rng: &mut R) -> Self {
        let (a0, a1, ainf) = (blocks.a0, blocks.a1, blocks.ainf);
        Self {
            p0: random_invertible(a0, rng),
            p1: random_invertible(a1, rng),
            pinf: random_invertible(ainf, rng),
            y0: random_matrix(a1, ainf, rng),
            y1: random_matrix(ainf, a0, rng),
            yinf: random_matrix(a0, a1, rng),
        }
    }

    /// The full change-of-basis matrices on `ℍ_0`, `ℍ_1`, `ℍ_∞`.
    pub fn full_matrices(&self) -> [F2Matrix; 3] {
        [
            lower_block(&self.pinf, &self.y0, &self.p1),
            lower_block(&self.p0, &self.y1, &self.pinf),
            lower_block(&self.p1, &self.yinf, &self.p0),
        ]
    }
}

pub fn random_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> F2Matrix {
    F2Matrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5))
}

pub fn random_invertible<R: Rng + ?Sized>(n: usize, rng: &mut R) -> F2Matrix {
    loop {
        let m = random_matrix(n, n, rng);
        if is_invertible(&m) {
            return m;
        }
    }
}

fn check_shape(what: &str, m: &F2Matrix, expected: (usize, usize)) -> Result<(), BlockError> {
    if m.shape() != expected {
        return Err(BlockError::Shape { what: what.to_string(), expected, actual: m.shape() });
    }
    Ok(())
}

/// Conjugates each `τ_v` by the corresponding admissible change and re-slices.
pub fn admissible_change(blocks: &BlockData, change: &AdmissibleChange) -> Result<BlockData, BlockError> {
    let (a0, a1, ainf) = (blocks.a0, blocks.a1, blocks.ainf);
    check_shape("P_0", &change.p0, (a0, a0))?;
    check_shape("P_1", &change.p1, (a1, a1))?;
    check_shape("P_inf", &change.pinf, (ainf, ainf))?;
    check_shape("Y_0", &change.y0, (a1, ainf))?;
    check_shape("Y_1", &change.y1, (ainf, a0))?;
    check_shape("Y_inf", &change.yinf, (a0, a1))?;
    for (name, p) in [("P_0", &change.p0), ("P_1", &change.p1), ("P_inf", &change.pinf)] {
        if !is_invertible(p) {
            return Err(BlockError::NotInvertible { what: name });
        }
    }
    let full = change.full_matrices();
    let inverses: Vec<F2Matrix> =
        full.iter().map(|m| inverse(m).expect("block triangular with invertible diagonal")).collect();
    let conj = |k: usize, tau: &F2Matrix| &(&inverses[k] * tau) * &full[k];
    let changed =
        BlockData::from_taus(a0, a1, ainf, conj(0, &blocks.tau0), conj(1, &blocks.tau1), conj(2, &blocks.tauinf))?;
    let [std_inf, std_0, std_1] = blocks.standard_maps();
    for (name, map, target, source) in [("f_inf", &std_inf, 1, 0), ("f_0", &std_0, 2, 1), ("f_1", &std_1, 0, 2)] {
        if &(&inverses[target] * map) * &full[source] != *map {
            return Err(BlockError::FormNotStandard { map: name });
        }
    }
    Ok(changed)
}
