//! Exact polynomial arithmetic: rationals, symbolic parameters and the
//! `∂`/λ variables of the λ-calculus layer.

pub mod monomial;
pub mod param;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod sparse;

pub use monomial::{LamMonomial, LamVar, Monomial, Param, ParamMonomial, VarId, MAX_LAM};
pub use param::{poly_gcd, ParamField, ParamPoly};
pub use parse::{parse_expr, parse_field, parse_poly, parse_poly_in, Expr, ParamScope};
pub use poly::Poly;
pub use scalar::{FieldScalar, Scalar};
pub use sparse::SparsePoly;
