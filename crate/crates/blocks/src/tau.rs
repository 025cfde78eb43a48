//! Duality maps induced by exchanging the two basepoints.

use f2linalg::{induced_map, F2Matrix};
use knotcx::{Cell, ChainComplex, ChainMap, KnotComplex, Label, Piece};

use bypass::{Bypass, GlobalMaps, Vertex};

use crate::BlockError;

/// Grading that `τ_v` sends `s` to: `−s` for `1` and `∞`, `−1−s` for `0`.
pub fn dual_grading(vertex: Vertex, s: i64) -> i64 {
    match vertex {
        Vertex::Zero => -1 - s,
        Vertex::One | Vertex::Infinity => -s,
    }
}

/// Chain-level duality `M(i_n^s) → M(i_n^{n−1−s})`: `A` and `B` are exchanged
/// through the conjugation, `T` is fixed.
pub fn cone_duality(knot: &KnotComplex, source: &ChainComplex, target: &ChainComplex) -> ChainMap {
    ChainMap::from_cell_map(source, target, |cell| {
        let l = cell.label;
        let image = knot.iota(l.generator);
        Some(match cell.piece {
            Piece::A => Cell::new(Piece::B, Label::new(image, 0, l.i)),
            Piece::B => Cell::new(Piece::A, Label::new(image, l.j, 0)),
            Piece::T | Piece::Plain => *cell,
        })
    })
}

/// Chain-level duality `C{i=s, j=0} → C{i=−s, j=0}`.
pub fn infinity_duality(knot: &KnotComplex, source: &ChainComplex, target: &ChainComplex) -> ChainMap {
    ChainMap::from_cell_map(source, target, |cell| {
        let l = cell.label;
        Some(Cell::plain(Label::new(knot.iota(l.generator), -l.i, 0)))
    })
}

/// `τ_v` on `⊕_s ℍ_v(s)` in the fixed bases of [`GlobalMaps`].
pub fn tau(knot: &KnotComplex, bypass: &Bypass, maps: &GlobalMaps, vertex: Vertex) -> Result<F2Matrix, BlockError> {
    let (lo, hi) = maps.window;
    let dims = &maps.dims[Vertex::ALL.iter().position(|&v| v == vertex).unwrap()];
    let mut offsets = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for &d in dims {
        offsets.push(acc);
        acc += d;
    }
    let mut matrix = F2Matrix::zeros(acc, acc);
    for s in lo..=hi {
        let dual = dual_grading(vertex, s);
        let source = bypass.level(s)?;
        if dual < lo || dual > hi {
            if source.rank(vertex) != 0 {
                return Err(BlockError::DualOutsideWindow { vertex: vertex.name(), s, dual });
            }
            continue;
        }
        let target = bypass.level(dual)?;
        let (chain, hs, ht) = match vertex {
            Vertex::Zero => (cone_duality(knot, &source.m0, &target.m0), &source.h0, &target.h0),
            Vertex::One => (cone_duality(knot, &source.m1, &target.m1), &source.h1, &target.h1),
            Vertex::Infinity => {
                (infinity_duality(knot, &source.infinity, &target.infinity), &source.hinf, &target.hinf)
            }
        };
        let (src_complex, tgt_complex) = match vertex {
            Vertex::Zero => (&source.m0, &target.m0),
            Vertex::One => (&source.m1, &target.m1),
            Vertex::Infinity => (&source.infinity, &target.infinity),
        };
        if !chain.is_chain_map(src_complex, tgt_complex) {
            return Err(BlockError::NotChainMap { vertex: vertex.name(), s });
        }
        let block = induced_map(&chain.matrix, hs, ht)
            .map_err(|e| BlockError::Internal(format!("duality {} at s={s}: {e}", vertex.name())))?;
        let row = offsets[(dual - lo) as usize];
        let col = offsets[(s - lo) as usize];
        matrix.paste(row, col, &block);
    }
    if !(&matrix * &matrix).is_identity() {
        return Err(BlockError::TauNotInvolution { vertex: vertex.name() });
    }
    Ok(matrix)
}

/// Gradings `s` where `rank ℍ_0(s) ≠ rank ℍ_0(1−s)`, i.e. where a duality on
/// `ℍ_0` with shift `s ↦ 1−s` cannot exist.
pub fn shifted_zero_mismatches(bypass: &Bypass) -> Vec<(i64, usize, usize)> {
    let (lo, hi) = bypass.window();
    let rank_at = |s: i64| bypass.level(s).map(|l| l.rank(Vertex::Zero)).unwrap_or(0);
    (lo..=hi)
        .filter_map(|s| {
            let (here, there) = (rank_at(s), rank_at(1 - s));
            (here != there).then_some((s, here, there))
        })
        .collect()
}
