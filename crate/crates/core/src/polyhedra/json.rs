//! Serializable mirrors of [`VPolyhedron`] and [`PiecewisePolynomial`] with
//! every number as an exact `"p/q"` string.

use serde::{Deserialize, Serialize};

use super::fiber::PiecewisePolynomial;
use super::hull::VPolyhedron;
use super::{Point, PolyhedraError};
use crate::exactnum::{format_rational, parse_rational, Rational};

fn strings(p: &[Rational]) -> Vec<String> {
    p.iter().map(format_rational).collect()
}

fn parse_point(p: &[String]) -> Result<Point, PolyhedraError> {
    p.iter().map(|x| parse_rational(x).map_err(PolyhedraError::from)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VPolyhedronJson {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<String>>,
    pub rays: Vec<Vec<String>>,
}

impl From<&VPolyhedron> for VPolyhedronJson {
    fn from(p: &VPolyhedron) -> Self {
        VPolyhedronJson {
            ambient_dim: p.ambient_dim,
            vertices: p.vertices.iter().map(|v| strings(v)).collect(),
            rays: p.rays.iter().map(|r| strings(r)).collect(),
        }
    }
}

impl TryFrom<&VPolyhedronJson> for VPolyhedron {
    type Error = PolyhedraError;

    fn try_from(j: &VPolyhedronJson) -> Result<Self, PolyhedraError> {
        let vertices = j.vertices.iter().map(|v| parse_point(v)).collect::<Result<Vec<_>, _>>()?;
        let rays = j.rays.iter().map(|r| parse_point(r)).collect::<Result<Vec<_>, _>>()?;
        for p in vertices.iter().chain(&rays) {
            if p.len() != j.ambient_dim {
                return Err(PolyhedraError::DimensionMismatch { expected: j.ambient_dim, found: p.len() });
            }
        }
        Ok(VPolyhedron { ambient_dim: j.ambient_dim, vertices, rays })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceJson {
    pub from: String,
    /// absent for the tail
    pub to: Option<String>,
    /// ascending coefficients in `s`
    pub coeffs: Vec<String>,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewisePolynomialJson {
    pub breakpoints: Vec<String>,
    pub pieces: Vec<PieceJson>,
}

impl From<&PiecewisePolynomial> for PiecewisePolynomialJson {
    fn from(f: &PiecewisePolynomial) -> Self {
        PiecewisePolynomialJson {
            breakpoints: strings(&f.breakpoints),
            pieces: f
                .intervals()
                .into_iter()
                .map(|(lo, hi, p)| PieceJson {
                    from: format_rational(&lo),
                    to: hi.as_ref().map(format_rational),
                    coeffs: strings(p.coeffs()),
                    display: p.display_in("s"),
                })
                .collect(),
        }
    }
}
