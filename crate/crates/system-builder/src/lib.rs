//! Construction of the algebraic systems in undetermined coefficients by
//! the three methods: direct expansion, the logarithmic-derivative ansatz,
//! and pull-back identification against the target Fuchsian normal form;
//! plus the degree-15 worked pipeline and the symbolic eliminations.

pub mod ansatz;
pub mod deg15;
pub mod direct;
pub mod logdiff;
pub mod pullback;
pub mod system;

pub use ansatz::AnsatzPolynomials;
pub use deg15::{deg15_pipeline, Deg15Pipeline, DEG15_PATTERN};
pub use direct::build_direct;
pub use logdiff::{
    build_logderiv, dependency_check, eliminate_r_when_k2, solver_view, verify_dependency,
    DependencyCertificate,
};
pub use pullback::{
    build_pullback, build_pullback_with_identification, eliminate_p_when_237, HeunTarget,
    HypergeometricEquation,
};
pub use system::{AlgebraicSystem, Method};
