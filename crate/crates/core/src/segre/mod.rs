//! The integral `1 - ζ(t)` of a fiber-volume function, Segre degrees, the
//! zeta-function structure report, the `T_a` transform and the independent
//! lattice-point oracle.

mod integral;
mod oracle;
mod shadow;
mod zeta;

pub use crate::pipeline::zeta_extension_check;
pub use integral::{beta_integral, density_integral, density_integral_unchecked, integrate_piece, rational_roots, spurious_poles, LaurentMonomial};
pub use oracle::{intersection_index_monomial, rational_index, sigma_by_interpolation};
pub use shadow::{multidegrees, t_transform, ShadowClass};
pub use zeta::{sigma_from_integral, zeta_report, ZetaReport};

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::{binomial, ExactError, Rational, UniPoly};
use crate::polyhedra::PolyhedraError;

/// `(σ_0, ..., σ_n)`, integral with `σ_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreDegrees {
    pub n: usize,
    pub sigma: Vec<Rational>,
}

impl SegreDegrees {
    pub fn integers(&self) -> Vec<BigInt> {
        self.sigma.iter().map(|c| c.to_integer()).collect()
    }

    /// `Σ binom(n,i) σ_{n-i} s^i`, the slice volume for `s` past the generating degree.
    pub fn tail_polynomial(&self) -> UniPoly {
        let n = self.n;
        UniPoly::new((0..=n).map(|i| Rational::from_integer(binomial(n as u64, i as u64)) * &self.sigma[n - i]).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegreError {
    #[error("index {i} out of range for n = {n}")]
    IndexOutOfRange { n: usize, i: usize },
    #[error("polynomial of degree {degree} exceeds n = {n}")]
    DegreeTooLarge { degree: usize, n: usize },
    #[error("invalid interval [{from}, {to}]")]
    BadInterval { from: String, to: String },
    #[error("spurious poles {poles} remain in denominator {denominator}")]
    ResidualSpuriousPole { poles: String, denominator: String },
    #[error("Segre degree sigma_{index} = {value} is not an integer")]
    NonIntegerDegree { index: usize, value: String },
    #[error("integral has value {0} at t = 0, expected 1")]
    NotNormalized(String),
    #[error("ideal is not monomial")]
    NotMonomial,
    #[error("level {s} is below the generating degree {d}")]
    DegreeTooSmall { s: String, d: u32 },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
}
