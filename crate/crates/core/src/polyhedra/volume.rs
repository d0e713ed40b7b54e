use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_traits::{One, Signed, Zero};

use super::hull::{affine_rank, cone_hull};
use super::Point;
use crate::exactnum::Rational;

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[col][col];
            let piv = m[col].clone();
            for (x, y) in m[r].iter_mut().zip(&piv).skip(col) {
                *x -= &f * y;
            }
        }
    }
    det
}

struct Lattice {
    /// facets of the full polytope as vertex sets
    facets: Vec<FixedBitSet>,
    memo: HashMap<FixedBitSet, Vec<Vec<usize>>>,
}

impl Lattice {
    fn facets_of(&self, face: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut cands: Vec<FixedBitSet> = Vec::new();
        for g in &self.facets {
            let mut s = face.clone();
            s.intersect_with(g);
            if s.count_ones(..) == 0 || &s == face || cands.contains(&s) {
                continue;
            }
            cands.push(s);
        }
        cands.iter().filter(|s| !cands.iter().any(|o| o != *s && s.is_subset(o))).cloned().collect()
    }

    /// Pulling triangulation: cone from the smallest vertex over the
    /// triangulated facets that avoid it.
    fn triangulate(&mut self, face: &FixedBitSet) -> Vec<Vec<usize>> {
        if let Some(t) = self.memo.get(face) {
            return t.clone();
        }
        let apex = face.ones().next().expect("nonempty face");
        let out = if face.count_ones(..) == 1 {
            vec![vec![apex]]
        } else {
            let mut out = Vec::new();
            for g in self.facets_of(face) {
                if g.contains(apex) {
                    continue;
                }
                for mut simplex in self.triangulate(&g) {
                    simplex.push(apex);
                    out.push(simplex);
                }
            }
            out
        };
        self.memo.insert(face.clone(), out.clone());
        out
    }
}

/// `n! * (Euclidean volume)` of `conv(points)` in `R^n`; zero when the hull is
/// lower-dimensional.
pub fn normalized_volume(points: &[Point]) -> Rational {
    let Some(first) = points.first() else {
        return Rational::zero();
    };
    let n = first.len();
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if affine_rank(&pts) != Some(n) {
        return Rational::zero();
    }
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return &pts[pts.len() - 1][0] - &pts[0][0];
    }

    let gens: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| {
            let mut g = vec![Rational::one()];
            g.extend(p.iter().cloned());
            g
        })
        .collect();
    let hull = cone_hull(&gens, n + 1);
    let verts: Vec<usize> = (0..pts.len()).filter(|&i| hull.extreme[i]).collect();
    let facets: Vec<FixedBitSet> = hull
        .incidence
        .iter()
        .map(|inc| {
            let mut b = FixedBitSet::with_capacity(verts.len());
            for (k, &v) in verts.iter().enumerate() {
                if inc.contains(v) {
                    b.insert(k);
                }
            }
            b
        })
        .collect();

    let mut lattice = Lattice { facets, memo: HashMap::new() };
    let mut all = FixedBitSet::with_capacity(verts.len());
    all.insert_range(..);
    let simplices = lattice.triangulate(&all);

    simplices
        .iter()
        .map(|s| {
            let base = &pts[verts[s[0]]];
            let m: Vec<Vec<Rational>> =
                s[1..].iter().map(|&k| pts[verts[k]].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
            determinant(m).abs()
        })
        .sum()
}
