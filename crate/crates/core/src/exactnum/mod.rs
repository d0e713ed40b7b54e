//! Exact scalar and univariate arithmetic.
//!
//! Every coordinate, coefficient and volume in the crate is a [`Rational`].
//! Univariate polynomials ([`UniPoly`]) are used both in the formal variable
//! `t` of the zeta function and in the level variable `s` of fiber volumes.

mod interp;
mod poly;
mod ratfun;
mod rational;

pub use interp::interpolate_polynomial;
pub use poly::UniPoly;
pub use ratfun::{RationalFunction, TruncatedSeries};
pub use rational::{binomial, format_rational, parse_rational, rat, rint, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at t = 0")]
    NonUnitConstantTerm,
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("need at least {needed} points, got {got}")]
    NotEnoughPoints { needed: usize, got: usize },
    #[error("sample ({x}, {y}) does not lie on the fitted polynomial (value there is {fitted})")]
    InconsistentExtraPoint { x: String, y: String, fitted: String },
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}
