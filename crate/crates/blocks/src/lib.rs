//! Duality maps on the triangle homologies, their normalized block form,
//! the derived `X` matrices, and classification of knots by block ranks.

pub mod admissible;
pub mod classify;
pub mod data;
pub mod normalize;
pub mod tau;

use thiserror::Error;

pub use admissible::{admissible_change, random_invertible, random_matrix, AdmissibleChange};
pub use classify::{classify, Classification, MatrixClass};
pub use data::{BlockData, Blocks, LawFailure};
pub use normalize::{check_exactness, normalize, normalize_with_details, Normalization};
pub use tau::{cone_duality, dual_grading, infinity_duality, shifted_zero_mismatches, tau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error(transparent)]
    Bypass(#[from] bypass::BypassError),
    #[error("triangle {} not exact at s={s}, vertex {vertex}", if *barred { "(barred)" } else { "(plain)" })]
    Exactness { s: i64, vertex: &'static str, barred: bool },
    #[error("duality on H_{vertex} is not a chain map at s={s}")]
    NotChainMap { vertex: &'static str, s: i64 },
    #[error("H_{vertex}({s}) is nonzero but its dual grading {dual} lies outside the window")]
    DualOutsideWindow { vertex: &'static str, s: i64, dual: i64 },
    #[error("tau_{vertex} does not square to the identity")]
    TauNotInvolution { vertex: &'static str },
    #[error("{map} differs from its conjugate by the duality maps")]
    Conjugation { map: &'static str },
    #[error("adapted basis of H_{vertex} is not a basis")]
    Basis { vertex: &'static str },
    #[error("{map} is not in standard block form")]
    FormNotStandard { map: &'static str },
    #[error("{what} has shape {actual:?}, expected {expected:?}")]
    Shape { what: String, expected: (usize, usize), actual: (usize, usize) },
    #[error("{what} is not invertible")]
    NotInvertible { what: &'static str },
    #[error("{0}")]
    Law(String),
    #[error("internal error: {0}")]
    Internal(String),
}
