use std::collections::BTreeSet;

use super::{format_rational, ExactError, Rational, UniPoly};

/// Fit the unique polynomial of degree at most `degree_bound` through the first
/// `degree_bound + 1` points; any further points must lie on it.
pub fn interpolate_polynomial(points: &[(Rational, Rational)], degree_bound: usize) -> Result<UniPoly, ExactError> {
    let needed = degree_bound + 1;
    if points.len() < needed {
        return Err(ExactError::NotEnoughPoints { needed, got: points.len() });
    }
    let mut seen = BTreeSet::new();
    for (x, _) in points {
        if !seen.insert(x.clone()) {
            return Err(ExactError::DuplicateAbscissa(format_rational(x)));
        }
    }

    // Newton divided differences.
    let xs: Vec<&Rational> = points[..needed].iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = points[..needed].iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut poly = UniPoly::zero();
    for i in (0..needed).rev() {
        let root = UniPoly::new(vec![-xs[i].clone(), Rational::from_integer(1.into())]);
        poly = &(&poly * &root) + &UniPoly::constant(table[i].clone());
    }

    for (x, y) in &points[needed..] {
        let fitted = poly.eval(x);
        if &fitted != y {
            return Err(ExactError::InconsistentExtraPoint {
                x: format_rational(x),
                y: format_rational(y),
                fitted: format_rational(&fitted),
            });
        }
    }
    Ok(poly)
}
