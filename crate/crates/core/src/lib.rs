//! Segre zeta functions of homogeneous ideals computed through
//! Newton-Okounkov bodies, in exact rational arithmetic.
//!
//! The body of a monomial ideal is its Newton polyhedron; for other ideals
//! it is approximated from below by sampling the valuation semigroup. The
//! normalized volume of its level slices is a piecewise polynomial in the
//! level `s`, and integrating it against `t^{n+1} / (1+st)^{n+2}` gives
//! `1 - ζ(t)`, whose first `n+1` coefficients are the Segre degrees.

pub mod error;
pub mod exactnum;
pub mod pipeline;
pub mod polyhedra;
pub mod polyring;
pub mod segre;
pub mod valuation;

pub use error::{Error, ErrorClass};
pub use exactnum::{Rational, RationalFunction, TruncatedSeries, UniPoly};
pub use pipeline::{run_index, run_zeta, zeta_extension_check, PipelineOptions, ZetaResult};
pub use polyhedra::{PiecewisePolynomial, VPolyhedron};
pub use polyring::{HomogeneousIdeal, MultiPoly};
pub use segre::{SegreDegrees, ZetaReport};
pub use valuation::ValuationConfig;
