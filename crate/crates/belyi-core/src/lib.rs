//! Core Belyi data model: branching patterns, fiber assignments, maps with
//! factored fiber data, and verification (the t-discriminant criterion,
//! pattern extraction, assembly of solver output, parasitic tests).

pub mod map;
pub mod pattern;
pub mod verify;

pub use map::{lift_ratfunc_q, parse_map_text, BelyiMap, FiberData, K};
pub use pattern::{BranchingPattern, Fiber, FiberAssignment, KlmSignature};
pub use verify::{
    assemble_from_products, branching_pattern, is_belyi, parasitic_test, Assembly,
    BelyiCertificate, ParasiticClass,
};
