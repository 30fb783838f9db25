//! Exact computer-algebra kernel for the ideal `P2(X)` generated by the 2x2
//! subpermanents of a symmetric matrix of indeterminates, together with a
//! harness that checks its structure (Groebner basis, minimal primes,
//! radical, primary decomposition) at small matrix sizes.

pub mod algebra;
mod error;
pub mod groebner;
pub mod ideal_ops;
pub mod permideal;
pub mod verify;

pub use algebra::{Coeff, Field, Monomial, MonomialOrder, Polynomial, Ring, VarId};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
