//! Exact arithmetic kernel: arbitrary-precision rationals, simple number
//! fields Q(xi), dense univariate and sparse multivariate polynomials,
//! gcd/resultant/squarefree machinery, field extensions, and certified
//! complex embeddings for the numeric-with-exact-verification routines.
//!
//! All values are immutable after construction and safe to share across
//! threads; operations are pure functions.

pub mod dyadic;
pub mod embed;
pub mod error;
pub mod etale;
pub mod linalg;
pub mod multipoly;
pub mod numberfield;
pub mod parse;
pub mod ratfunc;
pub mod rational;
pub mod ring;
pub mod roots;
pub mod unipoly;

pub use error::{AlgebraError, Result};
pub use multipoly::{MultiPoly, VarSet};
pub use numberfield::{AlgebraicNumber, NumberField};
pub use ratfunc::RationalFunction;
pub use rational::{Int, Rat};
pub use ring::{Field, Ring};
pub use unipoly::{discriminant, resultant, sylvester_resultant, UniPoly};
