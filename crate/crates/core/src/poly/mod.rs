//! Exact sparse multivariate polynomials over the rationals.
//!
//! The uniformizer is the ring variable `pi`; its square stands for the
//! uniformizer of the base field, which is never a separate variable.

mod division;
mod monomial;
mod polynomial;
mod ring;
pub(crate) mod terms;
mod text;

pub use division::{divide, reduce};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{integer, rational, ArithOp, Coeff, Polynomial};
pub use ring::{Ring, VarTable, PI};
pub(crate) use ring::same_ring;

#[cfg(test)]
mod tests;
