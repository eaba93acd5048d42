//! Multivariate polynomials over the rationals, Gröbner bases, and ideal
//! operations (intersection, comparison, Hilbert functions).

mod groebner;
mod ideal;
pub mod limit;
mod monomial;
mod polynomial;
mod ring;

use thiserror::Error;

pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use ideal::{hilbert_function, ideal_compare, intersect_ideals, Containment, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("ideal is not homogeneous")]
    NonHomogeneous,
    #[error("time limit exceeded")]
    TimeLimit,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid variable name `{0}`")]
    BadVariableName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}
