//! Triangle-adapted bases and the normalized block package of a knot.

use f2linalg::{greedy_independent, inverse, kernel_basis, F2Matrix, F2Vector};
use knotcx::KnotComplex;

use bypass::{Bypass, GlobalMaps, Vertex};

use crate::data::BlockData;
use crate::tau::tau;
use crate::BlockError;

/// Indices of unit vectors spanning a complement of `ker map`, lowest index first.
fn complement_of_kernel(map: &F2Matrix) -> Vec<usize> {
    let kernel = kernel_basis(map);
    let units: Vec<F2Vector> = (0..map.cols()).map(|k| F2Vector::unit(map.cols(), k)).collect();
    greedy_independent(&kernel, &units, map.cols())
}

/// `[e_V | incoming · e_W]` as a change-of-basis matrix.
fn adapted_basis(dim: usize, own: &[usize], incoming: &F2Matrix, previous: &[usize]) -> F2Matrix {
    let mut columns: Vec<F2Vector> = own.iter().map(|&k| F2Vector::unit(dim, k)).collect();
    columns.extend(previous.iter().map(|&k| incoming.column(k)));
    F2Matrix::from_columns(dim, &columns)
}

/// All intermediate data of a normalization.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub maps: GlobalMaps,
    /// Duality maps in the fixed homology bases.
    pub raw_taus: [F2Matrix; 3],
    /// Change-of-basis matrices whose columns are the adapted bases of `ℍ_0, ℍ_1, ℍ_∞`.
    pub bases: [F2Matrix; 3],
    pub blocks: BlockData,
}

/// Checks exactness of both triangles at every grading in the window.
pub fn check_exactness(knot: &KnotComplex, bypass: &Bypass) -> Result<(), BlockError> {
    let (lo, hi) = bypass.window();
    for s in lo..=hi + 1 {
        let triangle = bypass.triangle(knot, s)?;
        if let Some(failure) = triangle.exactness_failures().first() {
            return Err(BlockError::Exactness { s: failure.s, vertex: failure.vertex.name(), barred: failure.barred });
        }
    }
    Ok(())
}

/// Computes the normalized block package, verifying every invariant.
pub fn normalize(knot: &KnotComplex) -> Result<BlockData, BlockError> {
    Ok(normalize_with_details(knot, &Bypass::new(knot))?.blocks)
}

pub fn normalize_with_details(knot: &KnotComplex, bypass: &Bypass) -> Result<Normalization, BlockError> {
    check_exactness(knot, bypass)?;
    let maps = GlobalMaps::build(knot, bypass)?;
    let raw_taus = [
        tau(knot, bypass, &maps, Vertex::Zero)?,
        tau(knot, bypass, &maps, Vertex::One)?,
        tau(knot, bypass, &maps, Vertex::Infinity)?,
    ];
    let [t0, t1, tinf] = &raw_taus;
    for (name, bar, conjugate) in [
        ("fbar_0", &maps.fbar_0, &(tinf * &maps.f_0) * t1),
        ("fbar_1", &maps.fbar_1, &(t0 * &maps.f_1) * tinf),
        ("fbar_inf", &maps.fbar_inf, &(t1 * &maps.f_inf) * t0),
    ] {
        if bar != &conjugate {
            return Err(BlockError::Conjugation { map: name });
        }
    }

    let v0 = complement_of_kernel(&maps.f_inf);
    let v1 = complement_of_kernel(&maps.f_0);
    let vinf = complement_of_kernel(&maps.f_1);
    let (ainf, a0, a1) = (v0.len(), v1.len(), vinf.len());
    let bases = [
        adapted_basis(maps.total_dim(Vertex::Zero), &v0, &maps.f_1, &vinf),
        adapted_basis(maps.total_dim(Vertex::One), &v1, &maps.f_inf, &v0),
        adapted_basis(maps.total_dim(Vertex::Infinity), &vinf, &maps.f_0, &v1),
    ];
    let mut inverses = Vec::with_capacity(3);
    for (vertex, basis) in Vertex::ALL.iter().zip(&bases) {
        let inv = inverse(basis).ok_or(BlockError::Basis { vertex: vertex.name() })?;
        inverses.push(inv);
    }
    let conj = |k: usize, m: &F2Matrix| &(&inverses[k] * m) * &bases[k];
    let blocks = BlockData::from_taus(a0, a1, ainf, conj(0, t0), conj(1, t1), conj(2, tinf))?;

    let [std_inf, std_0, std_1] = blocks.standard_maps();
    for (name, map, target, source, expected) in
        [("f_inf", &maps.f_inf, 1, 0, std_inf), ("f_0", &maps.f_0, 2, 1, std_0), ("f_1", &maps.f_1, 0, 2, std_1)]
    {
        if &(&inverses[target] * map) * &bases[source] != expected {
            return Err(BlockError::FormNotStandard { map: name });
        }
    }
    if let Some(failure) = blocks.law_failures().into_iter().next() {
        return Err(BlockError::Law(failure.to_string()));
    }
    Ok(Normalization { maps, raw_taus, bases, blocks })
}
