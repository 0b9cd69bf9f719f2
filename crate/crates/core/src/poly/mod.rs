//! Exact multivariate polynomials over the entries of a generic matrix.

mod coeff;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use coeff::{Coefficient, Rational};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use polynomial::{Polynomial, Term};
pub use ring::{Field, Ring, VarId};
