//! Assembly of the type-D module of a knot complement from the surgery
//! cones and the bypass maps over a finite window of gradings.
//!
//! Each term below is a natural map `source → target` with a coefficient;
//! it contributes the entry `t → u` with that coefficient whenever `t`
//! appears in the image of the source cell `u`.

use std::collections::BTreeMap;

use f2linalg::F2Matrix;
use knotcx::{ChainComplex, KnotComplex};

use bypass::{bar_quotient, inclusion, quotient};
use surgery::{build_cone, c_infinity};

use crate::algebra::{Basis, Idempotent};
use crate::module::{Generator, Provenance, TypeDModule};
use crate::CfdError;

/// `M = C_0 ⊕ C_1` carries `ι_1`; `L = C_1 ⊕ C_∞` carries `ι_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    M,
    L,
}

impl Summand {
    fn idempotent(self) -> Idempotent {
        match self {
            Summand::M => Idempotent::One,
            Summand::L => Idempotent::Zero,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    C0,
    C1,
    CInf,
}

impl Part {
    fn name(self) -> &'static str {
        match self {
            Part::C0 => "C0",
            Part::C1 => "C1",
            Part::CInf => "Cinf",
        }
    }
}

type BlockKey = (Summand, Part, i64);

/// The terms of the differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    /// `d_0` on `C_0 ⊂ M`.
    DZero,
    /// `d_1` on `C_1 ⊂ M`.
    DOneM,
    /// `F̄_∞ : C_0(s−1) → C_1(s)` inside `M`.
    BarInclusion,
    /// `d_1` on `C_1 ⊂ L`.
    DOneL,
    /// `d_∞` on `C_∞ ⊂ L`.
    DInfinity,
    /// `F_0 : C_1(s) → C_∞(s)` inside `L`.
    Quotient,
    /// `ρ2`: the identity from `C_1 ⊂ L` to `C_1 ⊂ M`.
    Rho2,
    /// `ρ3 F̄_0 : C_1(s) ⊂ M → C_∞(s) ⊂ L`.
    Rho3,
    /// `ρ123 F̄_0 F_∞ : C_0(s) ⊂ M → C_∞(s) ⊂ L`.
    Rho123,
}

impl Term {
    pub const ALL: [Term; 9] = [
        Term::DZero,
        Term::DOneM,
        Term::BarInclusion,
        Term::DOneL,
        Term::DInfinity,
        Term::Quotient,
        Term::Rho2,
        Term::Rho3,
        Term::Rho123,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Term::DZero => "d_0",
            Term::DOneM => "d_1 on M",
            Term::BarInclusion => "Fbar_inf",
            Term::DOneL => "d_1 on L",
            Term::DInfinity => "d_inf",
            Term::Quotient => "F_0",
            Term::Rho2 => "rho2",
            Term::Rho3 => "rho3 Fbar_0",
            Term::Rho123 => "rho123 Fbar_0 F_inf",
        }
    }

    pub fn coefficient(self) -> Basis {
        match self {
            Term::DZero | Term::DOneM | Term::BarInclusion => Basis::Iota1,
            Term::DOneL | Term::DInfinity | Term::Quotient => Basis::Iota0,
            Term::Rho2 => Basis::Rho2,
            Term::Rho3 => Basis::Rho3,
            Term::Rho123 => Basis::Rho123,
        }
    }
}

/// The grading window `[−g−1−T, g+1+T]`.
pub fn window(knot: &KnotComplex, truncation: u32) -> (i64, i64) {
    let reach = knot.genus() as i64 + 1 + i64::from(truncation);
    (-reach, reach)
}

struct Layout {
    blocks: BTreeMap<BlockKey, (usize, ChainComplex)>,
    generators: Vec<Generator>,
}

impl Layout {
    fn new(knot: &KnotComplex, lo: i64, hi: i64) -> Self {
        let mut layout = Layout { blocks: BTreeMap::new(), generators: Vec::new() };
        for s in lo..=hi {
            let c0 = build_cone(knot, 0, s).cone;
            let c1 = build_cone(knot, 1, s).cone;
            layout.push(knot, (Summand::M, Part::C0, s), c0);
            layout.push(knot, (Summand::M, Part::C1, s), c1.clone());
            layout.push(knot, (Summand::L, Part::C1, s), c1);
            layout.push(knot, (Summand::L, Part::CInf, s), c_infinity(knot, s));
        }
        layout
    }

    fn push(&mut self, knot: &KnotComplex, key: BlockKey, complex: ChainComplex) {
        let (summand, part, s) = key;
        let summand_name = match summand {
            Summand::M => "M",
            Summand::L => "L",
        };
        let offset = self.generators.len();
        for cell in complex.cells() {
            let id = knot.id(cell.label.generator);
            let piece = cell.piece.as_str();
            let label = format!("{summand_name}.{}({s}).{piece}[{id},{},{}]", part.name(), cell.label.i, cell.label.j);
            self.generators.push(Generator {
                label,
                idempotent: summand.idempotent(),
                provenance: Some(Provenance {
                    summand: summand_name.to_string(),
                    part: part.name().to_string(),
                    s,
                    piece: piece.to_string(),
                    generator: id.to_string(),
                    i: cell.label.i,
                    j: cell.label.j,
                }),
            });
        }
        self.blocks.insert(key, (offset, complex));
    }

    fn complex(&self, key: &BlockKey) -> Option<&ChainComplex> {
        self.blocks.get(key).map(|(_, c)| c)
    }

    fn offset(&self, key: &BlockKey) -> usize {
        self.blocks[key].0
    }
}

/// One term at one grading: source block, target block and the map.
struct Piece {
    term: Term,
    source: BlockKey,
    target: BlockKey,
    matrix: F2Matrix,
}

fn pieces_at(layout: &Layout, s: i64) -> Vec<Piece> {
    use Part::{CInf, C0, C1};
    use Summand::{L, M};
    let get = |key: BlockKey| layout.complex(&key).expect("block inside window");
    let (m_c0, m_c1, l_c1, l_inf) = (get((M, C0, s)), get((M, C1, s)), get((L, C1, s)), get((L, CInf, s)));
    let mut pieces = vec![
        Piece { term: Term::DZero, source: (M, C0, s), target: (M, C0, s), matrix: m_c0.boundary().clone() },
        Piece { term: Term::DOneM, source: (M, C1, s), target: (M, C1, s), matrix: m_c1.boundary().clone() },
        Piece { term: Term::DOneL, source: (L, C1, s), target: (L, C1, s), matrix: l_c1.boundary().clone() },
        Piece { term: Term::DInfinity, source: (L, CInf, s), target: (L, CInf, s), matrix: l_inf.boundary().clone() },
        Piece {
            term: Term::Quotient,
            source: (L, C1, s),
            target: (L, CInf, s),
            matrix: quotient(l_c1, l_inf, s).matrix,
        },
        Piece { term: Term::Rho2, source: (L, C1, s), target: (M, C1, s), matrix: F2Matrix::identity(l_c1.dim()) },
        Piece {
            term: Term::Rho3,
            source: (M, C1, s),
            target: (L, CInf, s),
            matrix: bar_quotient(m_c1, l_inf, s).matrix,
        },
        Piece {
            term: Term::Rho123,
            source: (M, C0, s),
            target: (L, CInf, s),
            matrix: bar_quotient(m_c1, l_inf, s).compose(&inclusion(m_c0, m_c1)).matrix,
        },
    ];
    // Edges from C_0(s−1) leaving the window are dropped.
    if let Some(previous) = layout.complex(&(M, C0, s - 1)) {
        pieces.push(Piece {
            term: Term::BarInclusion,
            source: (M, C0, s - 1),
            target: (M, C1, s),
            matrix: inclusion(previous, m_c1).matrix,
        });
    }
    pieces
}

/// Builds the module over the window `[−g−1−T, g+1+T]` and checks typing and
/// the structure equation.
pub fn build_cfd(knot: &KnotComplex, truncation: u32) -> Result<TypeDModule, CfdError> {
    let module = build_unchecked(knot, truncation, &Term::ALL);
    module.check_typing()?;
    module.check_structure()?;
    Ok(module)
}

/// Builds the module from the given terms only, without checks.
pub fn build_unchecked(knot: &KnotComplex, truncation: u32, terms: &[Term]) -> TypeDModule {
    let (lo, hi) = window(knot, truncation);
    let layout = Layout::new(knot, lo, hi);
    let mut module = TypeDModule::new(layout.generators.clone());
    for s in lo..=hi {
        for piece in pieces_at(&layout, s) {
            if !terms.contains(&piece.term) {
                continue;
            }
            let (source, target) = (layout.offset(&piece.source), layout.offset(&piece.target));
            for (row, col) in piece.matrix.nonzero_entries() {
                module.add_entry(target + row, source + col, piece.term.coefficient().into());
            }
        }
    }
    module
}
