//! Bypass maps relating the surgery cones for framings 0 and 1 and the
//! infinity complex, their exact triangles, and the identities they satisfy.

pub mod chain;
pub mod global;
pub mod triangles;

pub use chain::{bar_quotient, chain_f, inclusion, quotient, ChainBypass};
pub use global::{
    composite_identities_check, nilpotency_check, nilpotency_index, CompositeIdentities, GlobalMaps, Nilpotency,
};
pub use triangles::{Bypass, BypassError, ExactnessFailure, Level, TriangleData, Vertex, DEFAULT_MARGIN};
