//! Exact λ-bracket calculus for conformal algebras over free `ℂ[∂]`-modules.
//!
//! Structure tables are matrices of polynomials in `∂` and a formal variable
//! `λ`; products of arbitrary elements follow by sesquilinearity. Every law is
//! checked by expanding both sides and testing the difference for zero in the
//! field of rational functions in the symbolic parameters.

pub mod axioms;
pub mod cli;
pub mod conformal;
pub mod constructions;
pub mod error;
pub mod identities;
pub mod polyring;
pub mod solver;
pub mod wab;

pub use error::{Error, Result};
pub use polyring::{LamVar, Param, ParamField, ParamPoly, Poly, SparsePoly};

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;
