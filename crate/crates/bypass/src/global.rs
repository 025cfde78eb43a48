//! Maps on `⊕_s ℍ_•(s)` over the support window, composite identities and
//! the nilpotency of the six-fold composite.

use f2linalg::{F2Matrix, F2Vector};
use knotcx::{ChainComplex, KnotComplex, Label};

use crate::triangles::{Bypass, BypassError, Level, Vertex};

/// Block matrices of the six homology maps over the support window.
/// Each `ℍ_•` is ordered by ascending grading, then by the fixed per-grading basis.
#[derive(Clone, Debug)]
pub struct GlobalMaps {
    pub window: (i64, i64),
    /// `dims[v][k]` is `dim ℍ_v(window.0 + k)` for `v` in `Vertex::ALL` order.
    pub dims: [Vec<usize>; 3],
    pub f_inf: F2Matrix,
    pub f_0: F2Matrix,
    pub f_1: F2Matrix,
    pub fbar_inf: F2Matrix,
    pub fbar_0: F2Matrix,
    pub fbar_1: F2Matrix,
}

fn vertex_index(v: Vertex) -> usize {
    match v {
        Vertex::Zero => 0,
        Vertex::One => 1,
        Vertex::Infinity => 2,
    }
}

impl GlobalMaps {
    pub fn build(knot: &KnotComplex, bypass: &Bypass) -> Result<Self, BypassError> {
        bypass.check_vanishing()?;
        let window = bypass.window();
        let (lo, hi) = window;
        let dims: [Vec<usize>; 3] =
            Vertex::ALL.map(|v| (lo..=hi).map(|s| bypass.level(s).map(|l| l.rank(v)).unwrap_or(0)).collect::<Vec<_>>());
        let offsets: Vec<Vec<usize>> = dims
            .iter()
            .map(|d| {
                let mut acc = 0;
                let mut out: Vec<usize> = d
                    .iter()
                    .map(|&n| {
                        let o = acc;
                        acc += n;
                        o
                    })
                    .collect();
                out.push(acc);
                out
            })
            .collect();
        let total = |v: Vertex| *offsets[vertex_index(v)].last().unwrap();
        let offset = |v: Vertex, s: i64| offsets[vertex_index(v)][(s - lo) as usize];
        let zeros = |to: Vertex, from: Vertex| F2Matrix::zeros(total(to), total(from));
        let mut maps = Self {
            window,
            dims: dims.clone(),
            f_inf: zeros(Vertex::One, Vertex::Zero),
            f_0: zeros(Vertex::Infinity, Vertex::One),
            f_1: zeros(Vertex::Zero, Vertex::Infinity),
            fbar_inf: zeros(Vertex::One, Vertex::Zero),
            fbar_0: zeros(Vertex::Infinity, Vertex::One),
            fbar_1: zeros(Vertex::Zero, Vertex::Infinity),
        };
        for s in lo..=hi {
            maps.f_inf.paste(offset(Vertex::One, s), offset(Vertex::Zero, s), &bypass.f_inf(s)?);
            maps.f_0.paste(offset(Vertex::Infinity, s), offset(Vertex::One, s), &bypass.f_0(s)?);
            maps.f_1.paste(offset(Vertex::Zero, s), offset(Vertex::Infinity, s), &bypass.f_1(knot, s)?);
            maps.fbar_0.paste(offset(Vertex::Infinity, s), offset(Vertex::One, s), &bypass.fbar_0(s)?);
            if s > lo {
                maps.fbar_inf.paste(offset(Vertex::One, s), offset(Vertex::Zero, s - 1), &bypass.fbar_inf(s)?);
                maps.fbar_1.paste(offset(Vertex::Zero, s - 1), offset(Vertex::Infinity, s), &bypass.fbar_1(knot, s)?);
            }
        }
        Ok(maps)
    }

    pub fn total_dim(&self, v: Vertex) -> usize {
        self.dims[vertex_index(v)].iter().sum()
    }

    /// Grading of each basis vector of `ℍ_v`.
    pub fn gradings(&self, v: Vertex) -> Vec<i64> {
        self.dims[vertex_index(v)]
            .iter()
            .enumerate()
            .flat_map(|(k, &n)| std::iter::repeat(self.window.0 + k as i64).take(n))
            .collect()
    }

    /// `f̄_0 ∘ f_∞ ∘ f̄_1 ∘ f_0 ∘ f̄_∞ ∘ f_1` on `⊕_s ℍ_∞(s)`.
    pub fn six_fold_composite(&self) -> F2Matrix {
        &(&(&(&(&self.fbar_0 * &self.f_inf) * &self.fbar_1) * &self.f_0) * &self.fbar_inf) * &self.f_1
    }
}

/// The smallest `p ≥ 1` with `matrix^p = 0`, searching up to `limit`.
pub fn nilpotency_index(matrix: &F2Matrix, limit: usize) -> Option<usize> {
    let mut power = matrix.clone();
    for p in 1..=limit.max(1) {
        if power.is_zero() {
            return Some(p);
        }
        power = &power * matrix;
    }
    None
}

/// Nilpotency of the six-fold composite: whether some power `≤ 2g+1` vanishes,
/// and the minimal such power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nilpotency {
    pub bound: usize,
    pub index: Option<usize>,
}

impl Nilpotency {
    pub fn holds(&self) -> bool {
        self.index.is_some()
    }
}

pub fn nilpotency_check(knot: &KnotComplex, bypass: &Bypass) -> Result<Nilpotency, BypassError> {
    let maps = GlobalMaps::build(knot, bypass)?;
    let bound = 2 * bypass.genus() as usize + 1;
    Ok(Nilpotency { bound, index: nilpotency_index(&maps.six_fold_composite(), bound) })
}

/// Applies `d^{a,b}` to a chain of `C{i=s, j=0}` and returns a chain of `C{i=s−a+b, j=0}`.
pub fn apply_component(
    knot: &KnotComplex,
    source: &Level,
    target: &ChainComplex,
    chain: &F2Vector,
    a: u32,
    b: u32,
) -> F2Vector {
    let mut out = F2Vector::zeros(target.dim());
    for idx in chain.ones() {
        let x = source.infinity.cells()[idx].label.generator;
        for e in knot.outgoing(x).filter(|e| e.a == a && e.b == b) {
            let cell = knotcx::Cell::plain(Label::new(e.to, knot.grading(e.to), 0));
            out.toggle(target.position(&cell).expect("component lands in the adjacent stratum"));
        }
    }
    out
}

/// Result of comparing both composite identities at one grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompositeIdentities {
    pub s: i64,
    /// `f̄_0^{s−1} f_∞^{s−1} f̄_1^s [x] = [d^{1,0} x]`
    pub descending: bool,
    /// `f_0^{s+1} f̄_∞^{s+1} f_1^s [x] = [d^{0,1} x]`
    pub ascending: bool,
}

impl CompositeIdentities {
    pub fn holds(&self) -> bool {
        self.descending && self.ascending
    }
}

/// Checks both composite identities on a basis of `ℍ_∞(s)`.
pub fn composite_identities_check(
    knot: &KnotComplex,
    bypass: &Bypass,
    s: i64,
) -> Result<CompositeIdentities, BypassError> {
    let level = bypass.level(s)?;
    let below = bypass.level(s - 1)?;
    let above = bypass.level(s + 1)?;
    let down = &(&bypass.fbar_0(s - 1)? * &bypass.f_inf(s - 1)?) * &bypass.fbar_1(knot, s)?;
    let up = &(&bypass.f_0(s + 1)? * &bypass.fbar_inf(s + 1)?) * &bypass.f_1(knot, s)?;
    let mut descending = true;
    let mut ascending = true;
    for (k, rep) in level.hinf.representatives().iter().enumerate() {
        let lowered = apply_component(knot, level, &below.infinity, rep, 1, 0);
        let raised = apply_component(knot, level, &above.infinity, rep, 0, 1);
        let expected_down =
            below.hinf.class_of(&lowered).map_err(|source| BypassError::Homology { map: "d10", s, source })?;
        let expected_up =
            above.hinf.class_of(&raised).map_err(|source| BypassError::Homology { map: "d01", s, source })?;
        descending &= down.column(k) == expected_down;
        ascending &= up.column(k) == expected_up;
    }
    Ok(CompositeIdentities { s, descending, ascending })
}
