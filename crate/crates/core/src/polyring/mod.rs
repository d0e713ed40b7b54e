//! Multivariate polynomials, homogeneous ideals and graded pieces of their powers.
//!
//! Graded pieces `(I^t)_s` are always handled through explicit spanning sets
//! (monomial multiples of `t`-fold generator products) and linear algebra;
//! no Gröbner machinery is involved.

mod budget;
mod graded;
mod ideal;
mod multipoly;

pub use budget::{Budget, DEFAULT_BUDGET};
pub use graded::{generating_degree, graded_piece_basis, graded_piece_basis_with_budget, rank, spanning_set, spanning_set_with_budget, GradedPieceBasis};
pub use ideal::{extend_ideal, is_monomial_ideal, HomogeneousIdeal};
pub use multipoly::{monomials_of_degree, ExponentVector, MultiPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("need at least 2 variables, got {0}")]
    TooFewVariables(usize),
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("generator {index} lives in {found} variables, expected {expected}")]
    VariableCountMismatch { index: usize, expected: usize, found: usize },
    #[error("budget of {limit} monomial operations exceeded")]
    BudgetExceeded { limit: u64 },
}
