use num_traits::{Signed, Zero};

use super::hull::{convex_hull, orthant_rays, VPolyhedron};
use super::volume::normalized_volume;
use super::{Point, PolyhedraError};
use crate::exactnum::Rational;
use crate::polyring::HomogeneousIdeal;
use crate::valuation::{SemigroupSample, ValuationConfig};

/// `conv(minimal generator exponents) + R_{>=0}^{n+1}`.
pub fn newton_polyhedron(ideal: &HomogeneousIdeal) -> Result<VPolyhedron, PolyhedraError> {
    let gens = ideal.minimal_monomial_generators().ok_or(PolyhedraError::NotMonomial)?;
    let points: Vec<Point> = gens.iter().map(|e| e.entries().iter().map(|&a| Rational::from_integer(a.into())).collect()).collect();
    convex_hull(&points, &orthant_rays(ideal.nvars()))
}

/// Drop points that another point dominates coordinatewise; with orthant
/// recession they can never be vertices.
fn undominated(mut points: Vec<Point>) -> Vec<Point> {
    points.sort();
    points.dedup();
    let mut keep: Vec<Point> = Vec::new();
    // lexicographic order puts every dominating point before the ones it dominates
    for p in points {
        if !keep.iter().any(|q| q.iter().zip(&p).all(|(a, b)| a <= b)) {
            keep.push(p);
        }
    }
    keep
}

/// Hull of the rescaled samples, with an empirical stabilization report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BodyApproximation {
    pub body: VPolyhedron,
    /// Hull using the levels `1..=t` only, for each `t` up to `t_max`.
    pub per_level: Vec<VPolyhedron>,
    pub t_max: u32,
    /// Whether the hull at `t_max` equals the hull at `t_max - 1` (false when `t_max = 1`).
    pub stabilized: bool,
    /// Smallest level whose hull already equals the final one.
    pub stable_since: u32,
}

/// `conv( union over t' of (1/t') tau(U_{t'}) ) + orthant`.
pub fn body_from_samples(samples: &[SemigroupSample], cfg: &ValuationConfig) -> Result<BodyApproximation, PolyhedraError> {
    let mut samples: Vec<&SemigroupSample> = samples.iter().collect();
    samples.sort_by_key(|s| s.t_level);
    if samples.is_empty() || samples.iter().all(|s| s.points.is_empty()) {
        return Err(PolyhedraError::EmptySamples);
    }
    let dim = cfg.nvars();
    let rays = orthant_rays(dim);
    let mut per_level: Vec<VPolyhedron> = Vec::new();
    let mut current: Vec<Point> = Vec::new();
    for sample in &samples {
        let scale = Rational::from_integer(sample.t_level.into());
        current.extend(
            sample
                .tau_points(cfg)
                .into_iter()
                .map(|p| p.into_iter().map(|a| Rational::from_integer(a.into()) / &scale).collect::<Point>()),
        );
        current = undominated(current);
        if current.is_empty() {
            // nothing sampled yet at this level
            continue;
        }
        let hull = convex_hull(&current, &rays)?;
        current = hull.vertices.clone();
        per_level.push(hull);
    }
    let body = per_level.last().cloned().ok_or(PolyhedraError::EmptySamples)?;
    let t_max = samples.last().map(|s| s.t_level).unwrap_or(1);
    let stabilized = per_level.len() >= 2 && per_level[per_level.len() - 2].same_set(&body);
    let first_equal = per_level.iter().position(|p| p.same_set(&body)).unwrap_or(per_level.len() - 1);
    let stable_since = t_max - (per_level.len() - 1 - first_equal) as u32;
    Ok(BodyApproximation { body, per_level, t_max, stabilized, stable_since })
}

/// `P ∩ {sum a_i = s}` projected to `(a_1, ..., a_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicePolytope {
    pub level: Rational,
    pub vertices: Vec<Point>,
}

impl SlicePolytope {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn normalized_volume(&self) -> Rational {
        polytope_normalized_volume(&self.vertices)
    }
}

fn level(p: &[Rational]) -> Rational {
    p.iter().sum()
}

pub fn slice_at_level(p: &VPolyhedron, s: &Rational) -> Result<SlicePolytope, PolyhedraError> {
    if let Some(r) = p.rays.iter().find(|r| !level(r).is_positive()) {
        return Err(PolyhedraError::UnboundedSlice(r.iter().map(crate::exactnum::format_rational).collect::<Vec<_>>().join(", ")));
    }
    let mut cands: Vec<Point> = Vec::new();
    let levels: Vec<Rational> = p.vertices.iter().map(|v| level(v)).collect();
    for (v, lv) in p.vertices.iter().zip(&levels) {
        if lv == s {
            cands.push(v.clone());
        }
        if lv < s {
            for r in &p.rays {
                let k = (s - lv) / level(r);
                cands.push(v.iter().zip(r).map(|(a, b)| a + &k * b).collect());
            }
        }
    }
    for i in 0..p.vertices.len() {
        for j in i + 1..p.vertices.len() {
            let (li, lj) = (&levels[i], &levels[j]);
            if (li < s && lj > s) || (li > s && lj < s) {
                let k = (s - li) / (lj - li);
                cands.push(p.vertices[i].iter().zip(&p.vertices[j]).map(|(a, b)| a + &k * (b - a)).collect());
            }
        }
    }
    let projected: Vec<Point> = cands.into_iter().map(|c| c[1..].to_vec()).collect();
    if projected.is_empty() {
        return Ok(SlicePolytope { level: s.clone(), vertices: Vec::new() });
    }
    let vertices = if projected[0].is_empty() { vec![Vec::new()] } else { convex_hull(&projected, &[])?.vertices };
    Ok(SlicePolytope { level: s.clone(), vertices })
}

/// `n!` times the Euclidean volume of a bounded polytope given by points.
pub fn polytope_normalized_volume(vertices: &[Point]) -> Rational {
    if vertices.is_empty() {
        return Rational::zero();
    }
    normalized_volume(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rint};
    use crate::polyring::{Budget, MultiPoly};
    use crate::valuation::sample_semigroup;

    fn pt(v: &[i64]) -> Point {
        v.iter().map(|&x| rint(x)).collect()
    }

    fn mono(nvars: usize, exps: &[&[u32]]) -> HomogeneousIdeal {
        HomogeneousIdeal::monomial(nvars, &exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn newton_examples() {
        let p = newton_polyhedron(&mono(3, &[&[1, 1, 0]])).unwrap();
        assert_eq!(p.vertices, vec![pt(&[1, 1, 0])]);
        assert_eq!(p.rays.len(), 3);
        let p = newton_polyhedron(&mono(3, &[&[2, 0, 0], &[0, 3, 0]])).unwrap();
        assert_eq!(p.vertices, vec![pt(&[0, 3, 0]), pt(&[2, 0, 0])]);
        let p = newton_polyhedron(&mono(2, &[&[1, 1], &[2, 1]])).unwrap();
        assert_eq!(p.vertices, vec![pt(&[1, 1])]);
        let lin = HomogeneousIdeal::new(2, vec![&MultiPoly::var(2, 0) + &MultiPoly::var(2, 1)]).unwrap();
        assert_eq!(newton_polyhedron(&lin), Err(PolyhedraError::NotMonomial));
    }

    #[test]
    fn slice_examples() {
        let p = newton_polyhedron(&mono(3, &[&[1, 1, 0]])).unwrap();
        assert_eq!(slice_at_level(&p, &rint(2)).unwrap().vertices, vec![pt(&[1, 0])]);
        let tri = slice_at_level(&p, &rint(4)).unwrap();
        assert_eq!(tri.vertices, vec![pt(&[1, 0]), pt(&[1, 2]), pt(&[3, 0])]);
        assert_eq!(tri.normalized_volume(), rint(4));
        assert!(slice_at_level(&p, &rint(1)).unwrap().is_empty());
        assert!(slice_at_level(&p, &rat(3, 2)).unwrap().is_empty());
        assert_eq!(polytope_normalized_volume(&[]), rint(0));
    }

    #[test]
    fn slice_between_vertex_levels() {
        // facets are a >= 0 and 3 a_0 + 2 a_1 >= 6; on a_0 = 5/2 - a_1 - a_2 the second
        // becomes a_1 + 3 a_2 <= 3/2: triangle (0,0), (3/2,0), (0,1/2) of area 3/8
        let p = newton_polyhedron(&mono(3, &[&[2, 0, 0], &[0, 3, 0]])).unwrap();
        let sl = slice_at_level(&p, &rat(5, 2)).unwrap();
        assert_eq!(sl.vertices, vec![vec![rint(0), rint(0)], vec![rint(0), rat(1, 2)], vec![rat(3, 2), rint(0)]]);
        let h = p.to_h();
        for v in &sl.vertices {
            let mut full = vec![rat(5, 2) - v.iter().sum::<Rational>()];
            full.extend(v.iter().cloned());
            assert!(h.contains_point(&full));
        }
        assert_eq!(sl.normalized_volume(), rat(3, 4));
    }

    #[test]
    fn unbounded_slices_are_rejected() {
        let p = convex_hull(&[pt(&[0, 0])], &[pt(&[1, -1])]).unwrap();
        assert!(matches!(slice_at_level(&p, &rint(1)), Err(PolyhedraError::UnboundedSlice(_))));
    }

    #[test]
    fn samples_of_monomial_ideal_match_newton() {
        let i = mono(3, &[&[1, 1, 0]]);
        let cfg = ValuationConfig::standard(3);
        let samples = sample_semigroup(&i, &cfg, 1, 5, &Budget::unlimited()).unwrap();
        let approx = body_from_samples(&samples, &cfg).unwrap();
        assert!(approx.body.same_set(&newton_polyhedron(&i).unwrap()));
        assert!(!approx.stabilized);

        let samples = sample_semigroup(&i, &cfg, 2, 6, &Budget::unlimited()).unwrap();
        let approx = body_from_samples(&samples, &cfg).unwrap();
        assert!(approx.stabilized);
        assert_eq!(approx.stable_since, 1);
        assert!(approx.per_level[0].same_set(&approx.per_level[1]));
    }

    #[test]
    fn samples_of_linear_form() {
        let i = HomogeneousIdeal::new(2, vec![&MultiPoly::var(2, 0) + &MultiPoly::var(2, 1)]).unwrap();
        let cfg = ValuationConfig::standard(2);
        let samples = sample_semigroup(&i, &cfg, 2, 4, &Budget::unlimited()).unwrap();
        let approx = body_from_samples(&samples, &cfg).unwrap();
        assert_eq!(approx.body.vertices, vec![pt(&[1, 0])]);
        assert!(approx.stabilized);
    }

    #[test]
    fn empty_samples_are_rejected() {
        let cfg = ValuationConfig::standard(2);
        assert_eq!(body_from_samples(&[], &cfg), Err(PolyhedraError::EmptySamples));
    }
}
