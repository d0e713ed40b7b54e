use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::{monomials_of_degree, Budget, ExponentVector, HomogeneousIdeal, MultiPoly, RingError};
use crate::exactnum::Rational;
use crate::valuation::ValuationConfig;

/// A basis of `(I^t)_s` whose elements have pairwise distinct valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPieceBasis {
    pub power: u32,
    pub degree: u32,
    pub basis: Vec<MultiPoly>,
}

impl GradedPieceBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Monomial multiples of `t`-fold generator products that span `(I^t)_s`.
pub fn spanning_set(ideal: &HomogeneousIdeal, t: u32, s: u32) -> Vec<MultiPoly> {
    spanning_set_with_budget(ideal, t, s, &Budget::unlimited()).expect("unlimited budget")
}

pub fn spanning_set_with_budget(ideal: &HomogeneousIdeal, t: u32, s: u32, budget: &Budget) -> Result<Vec<MultiPoly>, RingError> {
    let nvars = ideal.nvars();
    let products = generator_products(ideal, t, s);
    let mut out = BTreeSet::new();
    for prod in &products {
        let deg = prod.homogeneous_degree().unwrap_or(0);
        let fillers = monomials_of_degree(nvars, s - deg);
        budget.charge((fillers.len() * prod.num_terms()) as u64)?;
        for m in &fillers {
            out.insert(prod.shift(m));
        }
    }
    Ok(out.into_iter().collect())
}

/// Distinct products `g_{i_1} ... g_{i_t}` (indices non-decreasing) of degree at most `s`.
fn generator_products(ideal: &HomogeneousIdeal, t: u32, s: u32) -> Vec<MultiPoly> {
    fn rec(
        ideal: &HomogeneousIdeal,
        start: usize,
        left: u32,
        deg: u32,
        s: u32,
        acc: &MultiPoly,
        out: &mut BTreeSet<MultiPoly>,
    ) {
        if left == 0 {
            out.insert(acc.clone());
            return;
        }
        for i in start..ideal.generators().len() {
            let d = deg + ideal.degrees()[i];
            // remaining factors each add at least the minimum degree
            if d + (left - 1) * ideal.min_degree() > s {
                continue;
            }
            let next = acc * &ideal.generators()[i];
            rec(ideal, i, left - 1, d, s, &next, out);
        }
    }
    let mut out = BTreeSet::new();
    let one = MultiPoly::constant(ideal.nvars(), Rational::one());
    rec(ideal, 0, t, 0, s, &one, &mut out);
    out.into_iter().collect()
}

/// Row-reduce `polys` (all homogeneous of degree `degree`) so that pivots are
/// the smallest columns under `order`. Returns the nonzero reduced rows, each
/// scaled so its pivot coefficient is 1, sorted by pivot.
fn echelon(nvars: usize, degree: u32, polys: &[MultiPoly], order: impl Fn(&ExponentVector) -> Vec<u32>) -> Vec<MultiPoly> {
    let mut columns = monomials_of_degree(nvars, degree);
    columns.sort_by_cached_key(|e| order(e));
    let index: BTreeMap<&ExponentVector, usize> = columns.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); columns.len()];
            for (e, c) in p.terms() {
                row[index[e]] = c.clone();
            }
            row
        })
        .collect();

    let mut pivots: Vec<Vec<Rational>> = Vec::new();
    for col in 0..columns.len() {
        let Some(pos) = rows.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let mut pivot = rows.swap_remove(pos);
        let inv = Rational::one() / &pivot[col];
        for x in pivot.iter_mut().skip(col) {
            *x *= &inv;
        }
        for r in rows.iter_mut() {
            if r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot).skip(col) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        pivots.push(pivot);
    }

    pivots
        .into_iter()
        .map(|row| MultiPoly::from_terms(nvars, columns.iter().zip(row).map(|(e, c)| (e.entries().to_vec(), c))))
        .collect()
}

/// Basis of `(I^t)_s` triangular with respect to the valuation order: the
/// valuations of the basis elements are pairwise distinct.
pub fn graded_piece_basis(ideal: &HomogeneousIdeal, t: u32, s: u32, cfg: &ValuationConfig) -> GradedPieceBasis {
    graded_piece_basis_with_budget(ideal, t, s, cfg, &Budget::unlimited()).expect("unlimited budget")
}

pub fn graded_piece_basis_with_budget(
    ideal: &HomogeneousIdeal,
    t: u32,
    s: u32,
    cfg: &ValuationConfig,
    budget: &Budget,
) -> Result<GradedPieceBasis, RingError> {
    let span = spanning_set_with_budget(ideal, t, s, budget)?;
    let basis = if span.is_empty() { Vec::new() } else { echelon(ideal.nvars(), s, &span, |e| cfg.compare_key(e)) };
    Ok(GradedPieceBasis { power: t, degree: s, basis })
}

/// Dimension of the span of homogeneous polynomials of a common degree.
pub fn rank(polys: &[MultiPoly]) -> usize {
    let Some(first) = polys.iter().find(|p| !p.is_zero()) else {
        return 0;
    };
    let degree = first.homogeneous_degree().expect("rank expects homogeneous input");
    echelon(first.nvars(), degree, polys, |e| e.entries().to_vec()).len()
}

/// Largest degree of a generator that is not already in the ideal generated by
/// the lower-degree generators. Exact for monomial ideals, an upper bound for
/// the true generating degree otherwise.
pub fn generating_degree(ideal: &HomogeneousIdeal) -> u32 {
    if let Some(minimal) = ideal.minimal_monomial_generators() {
        return minimal.iter().map(ExponentVector::degree).max().unwrap();
    }
    let nvars = ideal.nvars();
    let gens = ideal.generators();
    let degs = ideal.degrees();
    let mut best = 0;
    for (g, &e) in gens.iter().zip(degs) {
        if e <= best {
            continue;
        }
        let mut span: Vec<MultiPoly> = Vec::new();
        for (h, &dh) in gens.iter().zip(degs) {
            if dh < e {
                span.extend(monomials_of_degree(nvars, e - dh).iter().map(|m| h.shift(m)));
            }
        }
        let base = rank(&span);
        span.push(g.clone());
        if rank(&span) > base {
            best = e;
        }
    }
    best
}
