//! Homology of the cones over a window of gradings, the induced and connecting
//! maps, and the checks built on them.

use std::collections::BTreeMap;

use f2linalg::{induced_map, rank, F2Matrix, F2Vector, Homology, HomologyError};
use knotcx::{Cell, ChainComplex, KnotComplex, Label, Piece};
use surgery::{build_cone, c_infinity};
use thiserror::Error;

use crate::chain::{bar_quotient, inclusion, quotient};

/// The three homology groups of a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Zero,
    One,
    Infinity,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::Zero, Vertex::One, Vertex::Infinity];

    pub fn name(self) -> &'static str {
        match self {
            Vertex::Zero => "0",
            Vertex::One => "1",
            Vertex::Infinity => "inf",
        }
    }
}

/// Internal-consistency failures. Any of these signals a bug or an invalid input
/// that slipped past validation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BypassError {
    #[error("connecting map {map} at s={s}: boundary of the lift leaves the subcomplex at cell {cell}")]
    Pullback { map: &'static str, s: i64, cell: String },
    #[error("homology computation for {map} at s={s}: {source}")]
    Homology { map: &'static str, s: i64, source: HomologyError },
    #[error("group H_{vertex}({s}) has rank {rank} outside the window")]
    Vanishing { vertex: &'static str, s: i64, rank: usize },
    #[error("grading {s} is outside the computed range {lo}..={hi}")]
    OutOfRange { s: i64, lo: i64, hi: i64 },
}

/// The complexes and homology at one grading.
#[derive(Clone, Debug)]
pub struct Level {
    pub s: i64,
    pub m0: ChainComplex,
    pub m1: ChainComplex,
    pub infinity: ChainComplex,
    pub h0: Homology,
    pub h1: Homology,
    pub hinf: Homology,
}

impl Level {
    fn new(knot: &KnotComplex, s: i64) -> Self {
        let m0 = build_cone(knot, 0, s).cone;
        let m1 = build_cone(knot, 1, s).cone;
        let infinity = c_infinity(knot, s);
        let h0 = m0.homology();
        let h1 = m1.homology();
        let hinf = infinity.homology();
        Self { s, m0, m1, infinity, h0, h1, hinf }
    }

    pub fn rank(&self, vertex: Vertex) -> usize {
        match vertex {
            Vertex::Zero => self.h0.rank(),
            Vertex::One => self.h1.rank(),
            Vertex::Infinity => self.hinf.rank(),
        }
    }
}

/// The six homology maps at one grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleData {
    pub s: i64,
    pub h0: usize,
    pub h1: usize,
    pub hinf: usize,
    /// `ℍ_0(s) → ℍ_1(s)`
    pub f_inf: F2Matrix,
    /// `ℍ_1(s) → ℍ_∞(s)`
    pub f_0: F2Matrix,
    /// `ℍ_∞(s) → ℍ_0(s)`
    pub f_1: F2Matrix,
    /// `ℍ_0(s−1) → ℍ_1(s)`
    pub fbar_inf: F2Matrix,
    /// `ℍ_1(s) → ℍ_∞(s)`
    pub fbar_0: F2Matrix,
    /// `ℍ_∞(s) → ℍ_0(s−1)`
    pub fbar_1: F2Matrix,
}

/// Exactness of one triangle at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessFailure {
    pub s: i64,
    pub barred: bool,
    pub vertex: Vertex,
}

fn exact_at(incoming: &F2Matrix, outgoing: &F2Matrix) -> bool {
    (outgoing * incoming).is_zero() && rank(incoming) + rank(outgoing) == incoming.rows()
}

impl TriangleData {
    /// Vertices where either triangle fails to be exact, given `dim ℍ_0(s−1)`.
    pub fn exactness_failures(&self) -> Vec<ExactnessFailure> {
        let mut failures = Vec::new();
        let plain = [
            (Vertex::Zero, &self.f_1, &self.f_inf),
            (Vertex::One, &self.f_inf, &self.f_0),
            (Vertex::Infinity, &self.f_0, &self.f_1),
        ];
        let barred = [
            (Vertex::Zero, &self.fbar_1, &self.fbar_inf),
            (Vertex::One, &self.fbar_inf, &self.fbar_0),
            (Vertex::Infinity, &self.fbar_0, &self.fbar_1),
        ];
        for (is_barred, list) in [(false, plain), (true, barred)] {
            for (vertex, incoming, outgoing) in list {
                if !exact_at(incoming, outgoing) {
                    failures.push(ExactnessFailure { s: self.s, barred: is_barred, vertex });
                }
            }
        }
        failures
    }

    pub fn is_exact(&self) -> bool {
        self.exactness_failures().is_empty()
    }
}

/// Homology data for a knot over `s ∈ [lo, hi]`, where `[lo + margin, hi − margin]`
/// is the support window `[−g−1, g+1]`.
#[derive(Clone, Debug)]
pub struct Bypass {
    genus: i64,
    lo: i64,
    hi: i64,
    levels: BTreeMap<i64, Level>,
}

/// Extra gradings computed on each side of the support window.
pub const DEFAULT_MARGIN: i64 = 3;

fn cell_name(knot: &KnotComplex, cell: &Cell) -> String {
    let l = cell.label;
    format!("{}[{},{},{}]", cell.piece.as_str(), knot.id(l.generator), l.i, l.j)
}

impl Bypass {
    pub fn new(knot: &KnotComplex) -> Self {
        Self::with_margin(knot, DEFAULT_MARGIN)
    }

    pub fn with_margin(knot: &KnotComplex, margin: i64) -> Self {
        let genus = knot.genus() as i64;
        let lo = -genus - 1 - margin;
        let hi = genus + 1 + margin;
        let levels = (lo..=hi).map(|s| (s, Level::new(knot, s))).collect();
        Self { genus, lo, hi, levels }
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// The support window `[−g−1, g+1]`.
    pub fn window(&self) -> (i64, i64) {
        (-self.genus - 1, self.genus + 1)
    }

    /// The computed range of gradings.
    pub fn range(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn level(&self, s: i64) -> Result<&Level, BypassError> {
        self.levels.get(&s).ok_or(BypassError::OutOfRange { s, lo: self.lo, hi: self.hi })
    }

    /// Checks that every group outside the support window vanishes.
    pub fn check_vanishing(&self) -> Result<(), BypassError> {
        let (wlo, whi) = self.window();
        for (&s, level) in &self.levels {
            if s >= wlo && s <= whi {
                continue;
            }
            for vertex in Vertex::ALL {
                let rank = level.rank(vertex);
                if rank != 0 {
                    return Err(BypassError::Vanishing { vertex: vertex.name(), s, rank });
                }
            }
        }
        Ok(())
    }

    fn induced(
        &self,
        map: &'static str,
        s: i64,
        matrix: &F2Matrix,
        source: &Homology,
        target: &Homology,
    ) -> Result<F2Matrix, BypassError> {
        induced_map(matrix, source, target).map_err(|source| BypassError::Homology { map, s, source })
    }

    /// `f_∞^s : ℍ_0(s) → ℍ_1(s)`
    pub fn f_inf(&self, s: i64) -> Result<F2Matrix, BypassError> {
        let level = self.level(s)?;
        self.induced("f_inf", s, &inclusion(&level.m0, &level.m1).matrix, &level.h0, &level.h1)
    }

    /// `f_0^s : ℍ_1(s) → ℍ_∞(s)`
    pub fn f_0(&self, s: i64) -> Result<F2Matrix, BypassError> {
        let level = self.level(s)?;
        self.induced("f_0", s, &quotient(&level.m1, &level.infinity, s).matrix, &level.h1, &level.hinf)
    }

    /// `f̄_∞^s : ℍ_0(s−1) → ℍ_1(s)`
    pub fn fbar_inf(&self, s: i64) -> Result<F2Matrix, BypassError> {
        let below = self.level(s - 1)?;
        let level = self.level(s)?;
        self.induced("fbar_inf", s, &inclusion(&below.m0, &level.m1).matrix, &below.h0, &level.h1)
    }

    /// `f̄_0^s : ℍ_1(s) → ℍ_∞(s)`
    pub fn fbar_0(&self, s: i64) -> Result<F2Matrix, BypassError> {
        let level = self.level(s)?;
        self.induced("fbar_0", s, &bar_quotient(&level.m1, &level.infinity, s).matrix, &level.h1, &level.hinf)
    }

    /// `f_1^s : ℍ_∞(s) → ℍ_0(s)`, lifting through the `B` cells with `j = −s`.
    pub fn f_1(&self, knot: &KnotComplex, s: i64) -> Result<F2Matrix, BypassError> {
        let level = self.level(s)?;
        connecting(knot, "f_1", s, level, &level.m0, &level.h0, |label| {
            Cell::new(Piece::B, Label::new(label.generator, 0, -s))
        })
    }

    /// `f̄_1^s : ℍ_∞(s) → ℍ_0(s−1)`, lifting through the `A` cells with `i = s`.
    pub fn fbar_1(&self, knot: &KnotComplex, s: i64) -> Result<F2Matrix, BypassError> {
        let level = self.level(s)?;
        let below = self.level(s - 1)?;
        connecting(knot, "fbar_1", s, level, &below.m0, &below.h0, |label| Cell::new(Piece::A, label))
    }

    /// All six maps at grading `s`.
    pub fn triangle(&self, knot: &KnotComplex, s: i64) -> Result<TriangleData, BypassError> {
        let level = self.level(s)?;
        Ok(TriangleData {
            s,
            h0: level.h0.rank(),
            h1: level.h1.rank(),
            hinf: level.hinf.rank(),
            f_inf: self.f_inf(s)?,
            f_0: self.f_0(s)?,
            f_1: self.f_1(knot, s)?,
            fbar_inf: self.fbar_inf(s)?,
            fbar_0: self.fbar_0(s)?,
            fbar_1: self.fbar_1(knot, s)?,
        })
    }

    /// Gradings at which a full triangle can be formed.
    pub fn triangle_range(&self) -> (i64, i64) {
        (self.lo + 1, self.hi)
    }
}

/// Snake-lemma map: lift each class representative of `ℍ_∞(s)` along `lift`,
/// apply the differential of `M(i_1^s)`, and read the result in `sub`.
fn connecting(
    knot: &KnotComplex,
    map: &'static str,
    s: i64,
    level: &Level,
    sub: &ChainComplex,
    sub_homology: &Homology,
    lift: impl Fn(Label) -> Cell,
) -> Result<F2Matrix, BypassError> {
    let mut columns = Vec::with_capacity(level.hinf.rank());
    for rep in level.hinf.representatives() {
        let lifted = level
            .m1
            .vector_of(rep.ones().map(|idx| lift(level.infinity.cells()[idx].label)).collect::<Vec<_>>().iter());
        let image = level.m1.boundary().mul_vec(&lifted);
        let mut pulled = F2Vector::zeros(sub.dim());
        for idx in image.ones() {
            let cell = &level.m1.cells()[idx];
            let pos =
                sub.position(cell).ok_or_else(|| BypassError::Pullback { map, s, cell: cell_name(knot, cell) })?;
            pulled.toggle(pos);
        }
        let class = sub_homology.class_of(&pulled).map_err(|source| BypassError::Homology { map, s, source })?;
        columns.push(class);
    }
    Ok(F2Matrix::from_columns(sub_homology.rank(), &columns))
}
