//! Chain-level bypass maps between the cones `M(i_0^s)`, `M(i_1^s)` and `C{i=s, j=0}`.

use knotcx::{Cell, ChainComplex, ChainMap, KnotComplex, Label, Piece};
use surgery::{build_cone, c_infinity};

/// The four chain-level bypass maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainBypass {
    /// `M(i_0^s) ↪ M(i_1^s)`
    Inclusion,
    /// `M(i_1^s) → C{i=s, j=0}` through the `B` cells with `j = −s`
    Quotient,
    /// `M(i_0^{s−1}) ↪ M(i_1^s)`
    BarInclusion,
    /// `M(i_1^s) → C{i=s, j=0}` through the `A` cells with `i = s`
    BarQuotient,
}

impl ChainBypass {
    pub const ALL: [ChainBypass; 4] =
        [ChainBypass::Inclusion, ChainBypass::Quotient, ChainBypass::BarInclusion, ChainBypass::BarQuotient];

    pub fn name(self) -> &'static str {
        match self {
            ChainBypass::Inclusion => "F_inf",
            ChainBypass::Quotient => "F_0",
            ChainBypass::BarInclusion => "Fbar_inf",
            ChainBypass::BarQuotient => "Fbar_0",
        }
    }
}

/// `F_∞^s` given the two cones.
pub fn inclusion(m0: &ChainComplex, m1: &ChainComplex) -> ChainMap {
    ChainMap::from_cell_map(m0, m1, |cell| Some(*cell))
}

/// `F_0^s`: `B` cell `[x,0,−s]` goes to `[x,s,0]`.
pub fn quotient(m1: &ChainComplex, infinity: &ChainComplex, s: i64) -> ChainMap {
    ChainMap::from_cell_map(m1, infinity, |cell| {
        (cell.piece == Piece::B && cell.label.j == -s).then(|| Cell::plain(Label::new(cell.label.generator, s, 0)))
    })
}

/// `F̄_0^s`: `A` cell `[x,s,0]` goes to itself.
pub fn bar_quotient(m1: &ChainComplex, infinity: &ChainComplex, s: i64) -> ChainMap {
    ChainMap::from_cell_map(m1, infinity, |cell| {
        (cell.piece == Piece::A && cell.label.i == s).then(|| Cell::plain(cell.label))
    })
}

/// Builds one chain-level bypass map at grading `s` together with its source and target.
pub fn chain_f(knot: &KnotComplex, s: i64, which: ChainBypass) -> (ChainComplex, ChainComplex, ChainMap) {
    let m1 = build_cone(knot, 1, s).cone;
    match which {
        ChainBypass::Inclusion => {
            let m0 = build_cone(knot, 0, s).cone;
            let map = inclusion(&m0, &m1);
            (m0, m1, map)
        }
        ChainBypass::BarInclusion => {
            let m0 = build_cone(knot, 0, s - 1).cone;
            let map = inclusion(&m0, &m1);
            (m0, m1, map)
        }
        ChainBypass::Quotient => {
            let infinity = c_infinity(knot, s);
            let map = quotient(&m1, &infinity, s);
            (m1, infinity, map)
        }
        ChainBypass::BarQuotient => {
            let infinity = c_infinity(knot, s);
            let map = bar_quotient(&m1, &infinity, s);
            (m1, infinity, map)
        }
    }
}
