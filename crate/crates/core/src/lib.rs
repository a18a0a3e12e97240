//! Exact polynomial and linear-algebra machinery for systems of
//! constant-free word equations.
//!
//! Words over a positive-integer alphabet are encoded as integer
//! polynomials, equations become linear systems over the field of rational
//! functions once a length type is fixed, and generalized polynomials with
//! linear-form exponents describe those systems for all length types at
//! once. The [`oracle`] module provides exhaustive enumeration that every
//! structural result in the crate is checked against.

pub mod cover;
pub mod equation;
mod error;
pub mod genpoly;
pub mod oracle;
pub mod poly;
pub mod transforms;
pub mod word;

pub use cover::{Hyperplane, HyperplaneCover};
pub use equation::{Equation, PolyMatrix, System, Unknowns, Var};
pub use error::{Error, Result};
pub use genpoly::{GenPoly, LinForm};
pub use oracle::{EnumerationBudget, SolutionSet};
pub use poly::{IntPolynomial, RationalFunction};
pub use transforms::{ElementaryTransformation, SolutionFactorization, VarMorphism};
pub use word::{LengthType, Morphism, Word};
