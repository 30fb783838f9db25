//! Exact fields, monomials, monomial orders, sparse polynomials and
//! symbolic matrices.

pub mod field;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use field::{Coeff, Field};
pub use matrix::{determinant, permanent, SymbolicMatrix};
pub use monomial::{Exponent, Monomial};
pub use parse::{format, parse};
pub use poly::{Polynomial, Term};
pub use ring::{base_var_count, compare, MonomialOrder, Ring, VarId};
