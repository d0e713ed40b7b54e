//! Exact convex geometry over the rationals: hulls of orthant-recession
//! bodies, level slices, normalized volumes and the piecewise-polynomial
//! fiber volume.

mod body;
mod dd;
mod fiber;
mod hull;
mod json;
mod volume;

pub use body::{body_from_samples, newton_polyhedron, polytope_normalized_volume, slice_at_level, BodyApproximation, SlicePolytope};
pub use fiber::{fiber_volume_function, FitCertificate, PiecewisePolynomial};
pub use hull::{convex_hull, orthant_rays, HPolyhedron, Halfspace, VPolyhedron};
pub use json::{PieceJson, PiecewisePolynomialJson, VPolyhedronJson};
pub use volume::normalized_volume;

use thiserror::Error;

use crate::exactnum::{ExactError, Rational};

pub type Point = Vec<Rational>;

/// Largest ambient dimension accepted by the hull routines.
pub const MAX_AMBIENT_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyhedraError {
    #[error("ambient dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("expected points of dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no points given")]
    EmptyInput,
    #[error("no sample points")]
    EmptySamples,
    #[error("ideal is not monomial")]
    NotMonomial,
    #[error("recession direction ({0}) does not increase the level, slices are unbounded")]
    UnboundedSlice(String),
    #[error("tail {tail} is not monic of degree {degree}")]
    TailNotMonic { tail: String, degree: usize },
    #[error("slice volume is discontinuous at s = {at}")]
    Discontinuous { at: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
}
