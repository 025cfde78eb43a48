//! Estimates of the kernel and cokernel of the splice matrix from the
//! individual blocks of each knot.

use f2linalg::{rank_profile, F2Matrix};

use blocks::{classify, BlockData, Classification, MatrixClass};
use bypass::Vertex;

use crate::matrix::assemble;
use crate::SpliceError;

/// The vertex involution `0 ↔ ∞`, `1 ↔ 1`.
pub fn iota_vertex(vertex: Vertex) -> Vertex {
    match vertex {
        Vertex::Zero => Vertex::Infinity,
        Vertex::One => Vertex::One,
        Vertex::Infinity => Vertex::Zero,
    }
}

/// `k̂` and `ĉ`: lower bounds for the kernel and cokernel of the splice matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HatEstimates {
    pub k_hat: usize,
    pub c_hat: usize,
}

impl HatEstimates {
    pub fn from_classes(first: &Classification, second: &Classification) -> Self {
        let sum = |pick: fn(&MatrixClass) -> usize| {
            Vertex::ALL.iter().map(|&v| pick(first.get(v)) * pick(second.get(iota_vertex(v)))).sum()
        };
        Self { k_hat: sum(|m| m.k), c_hat: sum(|m| m.c) }
    }
}

pub fn hat_estimates(first: &BlockData, second: &BlockData) -> HatEstimates {
    HatEstimates::from_classes(&classify(first), &classify(second))
}

/// Which special-pair condition holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    /// The first knot has all `B_v` of full rank.
    G,
    S1,
    S2,
}

/// Outcome of the special-pair trichotomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialClass {
    /// `i(𝔇) ≠ 1`.
    NotSpecial { i: usize },
    /// A condition holds; `swapped` means it holds with the knots exchanged.
    Case { case: SpecialCase, swapped: bool },
    /// `i(𝔇) = 1` but no condition holds.
    None,
}

fn special_case(first: &Classification, second: &Classification) -> Option<SpecialCase> {
    if first.full_rank {
        return Some(SpecialCase::G);
    }
    let second_zero_invertible = second.zero.injective && second.zero.surjective;
    if second_zero_invertible && first.zero.surjective && first.one.injective && second.infinity.injective {
        return Some(SpecialCase::S1);
    }
    if second_zero_invertible && first.zero.injective && first.one.surjective && second.infinity.surjective {
        return Some(SpecialCase::S2);
    }
    None
}

pub fn special_pair_class(first: &BlockData, second: &BlockData) -> Result<SpecialClass, SpliceError> {
    let i = assemble(first, second)?.i();
    if i != 1 {
        return Ok(SpecialClass::NotSpecial { i });
    }
    let (c1, c2) = (classify(first), classify(second));
    if let Some(case) = special_case(&c1, &c2) {
        return Ok(SpecialClass::Case { case, swapped: false });
    }
    if let Some(case) = special_case(&c2, &c1) {
        return Ok(SpecialClass::Case { case, swapped: true });
    }
    Ok(SpecialClass::None)
}

/// A cyclic ordering `(∘, •, ∗)` of the three vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub circle: Vertex,
    pub bullet: Vertex,
    pub star: Vertex,
}

pub const PATTERNS: [Pattern; 3] = [
    Pattern { circle: Vertex::Zero, bullet: Vertex::One, star: Vertex::Infinity },
    Pattern { circle: Vertex::One, bullet: Vertex::Infinity, star: Vertex::Zero },
    Pattern { circle: Vertex::Infinity, bullet: Vertex::Zero, star: Vertex::One },
];

/// `K`: `B_∘, B_•` injective and `B_∗` surjective; `C`: the dual hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundCase {
    K,
    C,
}

/// Claimed lower bounds against the actual kernel and cokernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub claimed_k: usize,
    pub claimed_c: usize,
    pub actual_k: usize,
    pub actual_c: usize,
}

impl BoundReport {
    pub fn satisfied(&self) -> bool {
        self.actual_k >= self.claimed_k && self.actual_c >= self.claimed_c
    }
}

fn require(class: &MatrixClass, vertex: Vertex, injective: bool) -> Result<(), SpliceError> {
    let ok = if injective { class.injective } else { class.surjective };
    if ok {
        Ok(())
    } else {
        Err(SpliceError::Hypothesis {
            matrix: format!("B_{}^1", vertex.name()),
            required: if injective { "injective" } else { "surjective" },
        })
    }
}

fn kernel_dim(m: &F2Matrix) -> usize {
    rank_profile(m).k
}

fn cokernel_dim(m: &F2Matrix) -> usize {
    rank_profile(m).c
}

pub fn block_bounds(
    first: &BlockData,
    second: &BlockData,
    pattern: Pattern,
    case: BoundCase,
) -> Result<BoundReport, SpliceError> {
    let (c1, c2) = (classify(first), classify(second));
    let Pattern { circle, bullet, star } = pattern;
    let injective_pair = case == BoundCase::K;
    require(c1.get(circle), circle, injective_pair)?;
    require(c1.get(bullet), bullet, injective_pair)?;
    require(c1.get(star), star, !injective_pair)?;

    let b2_star = &second.blocks(iota_vertex(star)).b;
    let (claimed_k, claimed_c) = match case {
        BoundCase::K => {
            let claimed_c =
                c1.get(bullet).c * c2.get(iota_vertex(bullet)).c + c1.get(circle).c * c2.get(iota_vertex(circle)).c;
            let claimed_k = kernel_dim(first.x(bullet)) * kernel_dim(&(b2_star * second.x(iota_vertex(bullet))));
            (claimed_k, claimed_c)
        }
        BoundCase::C => {
            let claimed_k =
                c1.get(bullet).k * c2.get(iota_vertex(bullet)).k + c1.get(circle).k * c2.get(iota_vertex(circle)).k;
            let claimed_c = cokernel_dim(first.x(circle)) * cokernel_dim(&(second.x(iota_vertex(circle)) * b2_star));
            (claimed_k, claimed_c)
        }
    };
    let profile = assemble(first, second)?.profile;
    Ok(BoundReport { claimed_k, claimed_c, actual_k: profile.k, actual_c: profile.c })
}
