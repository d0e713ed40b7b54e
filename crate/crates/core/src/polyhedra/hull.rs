use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dd::{dual_extreme_rays, independent_rows, integer_direction};
use super::{Point, PolyhedraError, MAX_AMBIENT_DIM};
use crate::exactnum::Rational;

/// `conv(vertices) + cone(rays)`, irredundant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolyhedron {
    pub ambient_dim: usize,
    pub vertices: Vec<Point>,
    pub rays: Vec<Point>,
}

/// `normal . x >= offset`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Halfspace {
    pub fn value(&self, x: &[Rational]) -> Rational {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// Facet inequalities, plus equations (`normal . x == offset`) when the set
/// is not full-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolyhedron {
    pub ambient_dim: usize,
    pub halfspaces: Vec<Halfspace>,
    pub equations: Vec<Halfspace>,
}

impl HPolyhedron {
    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| h.value(x) >= h.offset) && self.equations.iter().all(|h| h.value(x) == h.offset)
    }

    /// Whether `r` lies in the recession cone.
    pub fn contains_ray(&self, r: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| !h.value(r).is_negative()) && self.equations.iter().all(|h| h.value(r).is_zero())
    }
}

/// Facet structure of a pointed cone spanned by generators.
pub(crate) struct ConeHull {
    /// Facet normals `y` (`y . g >= 0` on the cone), lifted to the full space.
    pub facets: Vec<Vec<Rational>>,
    /// Linear forms vanishing on the whole cone.
    pub equations: Vec<Vec<Rational>>,
    /// Per facet, the generators on it.
    pub incidence: Vec<FixedBitSet>,
    /// Per generator, whether it spans an extreme ray (first of a parallel class).
    pub extreme: Vec<bool>,
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let piv = m[row].clone();
                for (x, y) in m[r].iter_mut().zip(&piv) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn cone_hull(gens: &[Vec<Rational>], dim: usize) -> ConeHull {
    let mut m: Vec<Vec<Rational>> = gens.to_vec();
    let pivots = rref(&mut m, dim);
    let rank = pivots.len();

    // null space of the generator matrix: one vector per free column
    let equations: Vec<Vec<Rational>> = (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut z = vec![Rational::zero(); dim];
            z[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                z[p] = -m[r][free].clone();
            }
            z
        })
        .collect();

    let nonzero: Vec<usize> = (0..gens.len()).filter(|&i| gens[i].iter().any(|x| !x.is_zero())).collect();
    let facets: Vec<Vec<Rational>> = if rank == 0 {
        Vec::new()
    } else {
        let projected: Vec<Vec<Rational>> = nonzero.iter().map(|&i| pivots.iter().map(|&c| gens[i][c].clone()).collect()).collect();
        dual_extreme_rays(&projected, rank)
            .into_iter()
            .map(|y| {
                let mut full = vec![Rational::zero(); dim];
                for (v, &c) in y.into_iter().zip(&pivots) {
                    full[c] = Rational::from_integer(v);
                }
                full
            })
            .collect()
    };

    let incidence: Vec<FixedBitSet> = facets
        .iter()
        .map(|y| {
            let mut b = FixedBitSet::with_capacity(gens.len());
            for &i in &nonzero {
                if dot(y, &gens[i]).is_zero() {
                    b.insert(i);
                }
            }
            b
        })
        .collect();

    let tight: Vec<FixedBitSet> = (0..gens.len())
        .map(|g| {
            let mut b = FixedBitSet::with_capacity(facets.len());
            for (f, inc) in incidence.iter().enumerate() {
                if inc.contains(g) {
                    b.insert(f);
                }
            }
            b
        })
        .collect();
    let dirs: Vec<Vec<BigInt>> = gens.iter().map(|g| integer_direction(g)).collect();

    let mut extreme = vec![false; gens.len()];
    for &g in &nonzero {
        let mut ok = true;
        for &h in &nonzero {
            if h == g {
                continue;
            }
            if dirs[h] == dirs[g] {
                if h < g {
                    ok = false;
                    break;
                }
                continue;
            }
            if tight[g].is_subset(&tight[h]) {
                ok = false;
                break;
            }
        }
        extreme[g] = ok;
    }

    ConeHull { facets, equations, incidence, extreme }
}

fn homogenize(points: &[Point], rays: &[Point]) -> Vec<Vec<Rational>> {
    let mut gens = Vec::with_capacity(points.len() + rays.len());
    for p in points {
        let mut g = vec![Rational::one()];
        g.extend(p.iter().cloned());
        gens.push(g);
    }
    for r in rays {
        let mut g = vec![Rational::zero()];
        g.extend(r.iter().cloned());
        gens.push(g);
    }
    gens
}

fn check_dims(dim: usize, sets: &[&[Point]]) -> Result<(), PolyhedraError> {
    if dim > MAX_AMBIENT_DIM {
        return Err(PolyhedraError::DimensionTooLarge { dim, max: MAX_AMBIENT_DIM });
    }
    for set in sets {
        if let Some(p) = set.iter().find(|p| p.len() != dim) {
            return Err(PolyhedraError::DimensionMismatch { expected: dim, found: p.len() });
        }
    }
    Ok(())
}

/// Irredundant V-representation of `conv(points) + cone(rays)`.
///
/// The recession cone must be pointed (true for every orthant-recession body).
pub fn convex_hull(points: &[Point], rays: &[Point]) -> Result<VPolyhedron, PolyhedraError> {
    let dim = points.first().ok_or(PolyhedraError::EmptyInput)?.len();
    check_dims(dim, &[points, rays])?;
    let gens = homogenize(points, rays);
    let hull = cone_hull(&gens, dim + 1);
    let mut vertices: Vec<Point> = Vec::new();
    let mut out_rays: Vec<Point> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if !hull.extreme[i] {
            continue;
        }
        if i < points.len() {
            vertices.push(points[i].clone());
        } else {
            let d = integer_direction(&g[1..]);
            out_rays.push(d.into_iter().map(Rational::from_integer).collect());
        }
    }
    vertices.sort();
    out_rays.sort();
    out_rays.dedup();
    Ok(VPolyhedron { ambient_dim: dim, vertices, rays: out_rays })
}

impl VPolyhedron {
    /// Facet description of the same set.
    pub fn to_h(&self) -> HPolyhedron {
        let gens = homogenize(&self.vertices, &self.rays);
        let hull = cone_hull(&gens, self.ambient_dim + 1);
        let split = |y: &Vec<Rational>| Halfspace { normal: y[1..].to_vec(), offset: -y[0].clone() };
        let halfspaces = hull
            .facets
            .iter()
            .filter(|y| y[1..].iter().any(|x| !x.is_zero()))
            .map(split)
            .collect();
        let equations = hull.equations.iter().map(split).collect();
        HPolyhedron { ambient_dim: self.ambient_dim, halfspaces, equations }
    }

    /// Set equality, by mutual containment of vertices and rays.
    pub fn same_set(&self, other: &VPolyhedron) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        let contains = |h: &HPolyhedron, p: &VPolyhedron| {
            p.vertices.iter().all(|v| h.contains_point(v)) && p.rays.iter().all(|r| h.contains_ray(r))
        };
        contains(&self.to_h(), other) && contains(&other.to_h(), self)
    }

    /// `a . x` minimized over the vertices (the linear functional's minimum on
    /// the polyhedron when `a` is nonnegative on the rays).
    pub fn min_level(&self) -> Option<Rational> {
        self.vertices.iter().map(|v| v.iter().sum::<Rational>()).min()
    }
}

/// The `n+1` standard basis directions of `R^{n+1}`.
pub fn orthant_rays(dim: usize) -> Vec<Point> {
    (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

/// Affine rank of a point set; `None` for the empty set.
pub(crate) fn affine_rank(points: &[Point]) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect()).collect();
    Some(independent_rows(&diffs).len())
}
