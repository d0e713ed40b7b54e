//! Double description for pointed cones given by generators.
//!
//! For a full-dimensional cone `C = cone(g_1, ..., g_m)` in `R^d`, the extreme
//! rays of the dual cone `{y : g_i . y >= 0}` are exactly the facet normals of
//! `C`. They are built by adding one constraint at a time to an initial
//! simplicial cone, with the combinatorial adjacency test.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::Rational;

pub(crate) fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Clear denominators and divide by the content; direction is preserved.
pub(crate) fn integer_direction(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect())
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Ray {
    v: Vec<BigInt>,
    zero: FixedBitSet,
}

/// Indices of a maximal linearly independent subset of `rows`, greedily in order.
pub(crate) fn independent_rows(rows: &[Vec<Rational>]) -> Vec<usize> {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if !r[p].is_zero() {
                let f = &r[p] / &b[p];
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            basis.push(r);
            pivots.push(p);
            chosen.push(idx);
        }
    }
    chosen
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("matrix is invertible");
        a.swap(col, piv);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Extreme rays of `{y in R^d : g . y >= 0 for all rows g}`.
///
/// The rows must span `R^d` (so the result is a pointed cone).
pub(crate) fn dual_extreme_rays(rows: &[Vec<Rational>], d: usize) -> Vec<Vec<BigInt>> {
    let basis = independent_rows(rows);
    assert_eq!(basis.len(), d, "generators must span the ambient space");
    let m = rows.len();
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_direction(r)).collect();

    let b: Vec<Vec<Rational>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let inv = invert(&b);
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let col: Vec<Rational> = (0..d).map(|i| inv[i][j].clone()).collect();
            let mut zero = FixedBitSet::with_capacity(m);
            for (k, &row) in basis.iter().enumerate() {
                if k != j {
                    zero.insert(row);
                }
            }
            Ray { v: integer_direction(&col), zero }
        })
        .collect();

    let mut in_basis = vec![false; m];
    for &i in &basis {
        in_basis[i] = true;
    }

    for i in (0..m).filter(|&i| !in_basis[i]) {
        let g = &int_rows[i];
        let dots: Vec<BigInt> = rays.iter().map(|r| dot(g, &r.v)).collect();
        if dots.iter().all(|x| !x.is_negative()) {
            for (r, x) in rays.iter_mut().zip(&dots) {
                if x.is_zero() {
                    r.zero.insert(i);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| dots[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| dots[k].is_negative()).collect();

        let mut created: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].zero.clone();
                common.intersect_with(&rays[q].zero);
                if common.count_ones(..) + 2 < d {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(k, r)| k == p || k == q || !common.is_subset(&r.zero));
                if !adjacent {
                    continue;
                }
                let ap = &dots[p];
                let aq = -&dots[q];
                let v: Vec<BigInt> = rays[q].v.iter().zip(&rays[p].v).map(|(x, y)| ap * x + &aq * y).collect();
                let mut zero = common;
                zero.insert(i);
                created.push(Ray { v: primitive(v), zero });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut r, x) in rays.into_iter().zip(dots) {
            if x.is_negative() {
                continue;
            }
            if x.is_zero() {
                r.zero.insert(i);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }
    rays.into_iter().map(|r| r.v).collect()
}
