//! Intersection indices straight from lattice points, independent of the
//! body and the integral.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{SegreDegrees, SegreError};
use crate::exactnum::{binomial, format_rational, interpolate_polynomial, Rational};
use crate::polyhedra::normalized_volume;
use crate::polyring::{generating_degree, monomials_of_degree, ExponentVector, HomogeneousIdeal};

fn minimal_generators(ideal: &HomogeneousIdeal) -> Result<Vec<ExponentVector>, SegreError> {
    ideal.minimal_monomial_generators().ok_or(SegreError::NotMonomial)
}

/// Normalized volume of the hull of `(a_1, ..., a_n)` over the degree-`degree`
/// monomials divisible by one of `gens`, scaled down by `scale^n`.
fn hull_index(nvars: usize, gens: &[ExponentVector], degree: u32, scale: u32) -> Rational {
    let points: Vec<Vec<Rational>> = monomials_of_degree(nvars, degree)
        .into_iter()
        .filter(|m| gens.iter().any(|g| g.divides(m)))
        .map(|m| m.entries()[1..].iter().map(|&a| Rational::from_integer(a.into())).collect())
        .collect();
    if points.is_empty() {
        return Rational::from_integer(0.into());
    }
    let n = nvars as u32 - 1;
    normalized_volume(&points) / Rational::from_integer(BigInt::from(scale).pow(n))
}

/// `[I_s, ..., I_s]` for a monomial ideal: `n!` times the volume of the hull of
/// dehomogenized exponents of the degree-`s` monomials in `I`.
pub fn intersection_index_monomial(ideal: &HomogeneousIdeal, s: u32) -> Result<Rational, SegreError> {
    let gens = minimal_generators(ideal)?;
    let d = generating_degree(ideal);
    if s < d {
        return Err(SegreError::DegreeTooSmall { s: s.to_string(), d });
    }
    Ok(hull_index(ideal.nvars(), &gens, s, 1))
}

/// Exponents of the products of `a` generators (with repetition).
fn power_generators(gens: &[ExponentVector], a: u32) -> Vec<ExponentVector> {
    let mut layer: BTreeSet<ExponentVector> = BTreeSet::new();
    layer.insert(ExponentVector::zeros(gens[0].len()));
    for _ in 0..a {
        layer = layer.iter().flat_map(|e| gens.iter().map(move |g| e.add(g))).collect();
    }
    // drop non-minimal products to keep the divisibility test short
    let all: Vec<ExponentVector> = layer.into_iter().collect();
    all.iter().filter(|e| !all.iter().any(|f| f != *e && f.divides(e))).cloned().collect()
}

/// `(1/a^n) [(I^a)_b, ..., (I^a)_b]` for `q = b/a` in lowest terms.
pub fn rational_index(ideal: &HomogeneousIdeal, q: &Rational) -> Result<Rational, SegreError> {
    let gens = minimal_generators(ideal)?;
    let d = generating_degree(ideal);
    if q < &Rational::from_integer(d.into()) || !q.is_positive() {
        return Err(SegreError::DegreeTooSmall { s: format_rational(q), d });
    }
    let too_big = || SegreError::DegreeTooSmall { s: format_rational(q), d };
    let a = u32::try_from(q.denom()).map_err(|_| too_big())?;
    let b = u32::try_from(q.numer()).map_err(|_| too_big())?;
    Ok(hull_index(ideal.nvars(), &power_generators(&gens, a), b, a))
}

/// `σ` from the identity `[I_s, ..., I_s] = Σ binom(n,j) σ_j s^{n-j}` for
/// `s >= d`, fitted at `s = d, ..., d+n` and verified at `s = d+n+1`.
pub fn sigma_by_interpolation(ideal: &HomogeneousIdeal) -> Result<SegreDegrees, SegreError> {
    let n = ideal.projective_dim();
    let d = generating_degree(ideal);
    let samples: Vec<(Rational, Rational)> = (d..=d + n as u32 + 1)
        .map(|s| Ok((Rational::from_integer(s.into()), intersection_index_monomial(ideal, s)?)))
        .collect::<Result<_, SegreError>>()?;
    let poly = interpolate_polynomial(&samples, n)?;
    let sigma: Vec<Rational> = (0..=n)
        .map(|j| poly.coeff(n - j) / Rational::from_integer(binomial(n as u64, j as u64)))
        .collect();
    if let Some((index, c)) = sigma.iter().enumerate().find(|(_, c)| !c.is_integer()) {
        return Err(SegreError::NonIntegerDegree { index, value: format_rational(c) });
    }
    if !sigma[0].is_one() {
        return Err(SegreError::NotNormalized(format_rational(&sigma[0])));
    }
    Ok(SegreDegrees { n, sigma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rint};

    fn mono(nvars: usize, exps: &[&[u32]]) -> HomogeneousIdeal {
        HomogeneousIdeal::monomial(nvars, &exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn index_examples() {
        let h = mono(3, &[&[1, 1, 0]]);
        assert_eq!(intersection_index_monomial(&h, 3).unwrap(), rint(1));
        assert_eq!(intersection_index_monomial(&h, 4).unwrap(), rint(4));
        assert!(matches!(intersection_index_monomial(&h, 1), Err(SegreError::DegreeTooSmall { .. })));
        let ci = mono(3, &[&[2, 0, 0], &[0, 3, 0]]);
        assert_eq!(intersection_index_monomial(&ci, 4).unwrap(), rint(10));
    }

    #[test]
    fn rational_examples() {
        let h = mono(3, &[&[1, 1, 0]]);
        assert_eq!(rational_index(&h, &rint(3)).unwrap(), rint(1));
        assert_eq!(rational_index(&h, &rat(5, 2)).unwrap(), rat(1, 4));
        assert!(rational_index(&h, &rat(3, 2)).is_err());
        // the same level written with a larger denominator: (I^4)_{10} scaled by 1/4^2
        let gens = minimal_generators(&h).unwrap();
        assert_eq!(hull_index(3, &power_generators(&gens, 4), 10, 4), rat(1, 4));
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(sigma_by_interpolation(&mono(3, &[&[1, 1, 0]])).unwrap().sigma, vec![rint(1), rint(-2), rint(4)]);
        assert_eq!(sigma_by_interpolation(&mono(3, &[&[2, 0, 0], &[0, 3, 0]])).unwrap().sigma, vec![rint(1), rint(0), rint(-6)]);
        assert_eq!(sigma_by_interpolation(&mono(2, &[&[1, 0]])).unwrap().sigma, vec![rint(1), rint(-1)]);
    }

    #[test]
    fn multiadditivity() {
        // hull of exponents of (I_s)^a is a times the hull of I_s, so the index scales by a^n
        let i = mono(3, &[&[2, 1, 0], &[0, 2, 1], &[1, 0, 2]]);
        let s = 3;
        let base = intersection_index_monomial(&i, s).unwrap();
        let gens: Vec<ExponentVector> = monomials_of_degree(3, s).into_iter().filter(|m| i.contains_monomial(m).unwrap()).collect();
        for a in 1..=3u32 {
            let prods = power_generators(&gens, a);
            // unscaled hull of the degree-(a s) part of (I_s)^a
            assert_eq!(hull_index(3, &prods, a * s, 1), &base * Rational::from_integer((a * a).into()));
        }
    }

    #[test]
    fn non_monomial_rejected() {
        use crate::polyring::MultiPoly;
        let lin = HomogeneousIdeal::new(2, vec![&MultiPoly::var(2, 0) + &MultiPoly::var(2, 1)]).unwrap();
        assert_eq!(intersection_index_monomial(&lin, 2), Err(SegreError::NotMonomial));
    }
}
