//! Sparse multivariate polynomials over the exact rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub(crate) use polynomial::same_ring;
pub use polynomial::{poly_arith, ArithOp, Coefficient, Polynomial};
pub use ring::{validate_name, Ring};
