use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{SegreDegrees, SegreError};
use crate::exactnum::{format_rational, Rational, RationalFunction, UniPoly};

/// Series coefficients `σ_0..σ_n` of `R = 1 - ζ`.
pub fn sigma_from_integral(r: &RationalFunction, n: usize) -> Result<SegreDegrees, SegreError> {
    if !r.value_at_zero().is_one() {
        return Err(SegreError::NotNormalized(format_rational(&r.value_at_zero())));
    }
    let series = r.to_series(n);
    if let Some((index, c)) = series.coeffs().iter().enumerate().find(|(_, c)| !c.is_integer()) {
        return Err(SegreError::NonIntegerDegree { index, value: format_rational(c) });
    }
    Ok(SegreDegrees { n, sigma: series.coeffs().to_vec() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaReport {
    pub zeta: RationalFunction,
    /// `d_0, ..., d_r` of the matched factor subset.
    pub degree_sequence_used: Vec<u32>,
    /// `A(t)` over the matched subset, when it is a polynomial.
    pub numerator_a: Option<UniPoly>,
    /// The reduced denominator divides `∏(1 + d_i t)` over the generator degrees.
    pub pole_check: bool,
    /// `deg A <= r` and `A` has nonnegative integer coefficients.
    pub nonneg_check: bool,
    pub notes: Vec<String>,
}

fn product(degrees: &[u32]) -> UniPoly {
    degrees.iter().fold(UniPoly::one(), |acc, &d| &acc * &UniPoly::linear_unit(Rational::from_integer(d.into())))
}

/// `A = ζ ∏(1 + d_i t) - d_0...d_r t^{r+1}` and whether it has the expected shape.
fn numerator_for(zeta: &RationalFunction, subset: &[u32]) -> Option<(UniPoly, bool)> {
    let prod = product(subset);
    let (q, rem) = (zeta.num() * &prod).div_rem(zeta.den());
    if !rem.is_zero() {
        return None;
    }
    let lead: BigInt = subset.iter().map(|&d| BigInt::from(d)).product();
    let a = &q - &UniPoly::monomial(Rational::from_integer(lead), subset.len());
    let shape = a.degree().is_none_or(|d| d < subset.len())
        && a.coeffs().iter().all(|c| c.is_integer() && !c.is_negative());
    Some((a, shape))
}

/// Sub-multisets of `pool` in order of size, then lexicographically.
fn submultisets(pool: &[u32]) -> Vec<Vec<u32>> {
    let k = pool.len();
    let mut out: Vec<Vec<u32>> = (0u32..(1 << k)).map(|mask| (0..k).filter(|i| mask & (1 << i) != 0).map(|i| pool[i]).collect()).collect();
    out.sort_by(|a: &Vec<u32>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

/// Structure checks on `ζ = 1 - R` against the generator degrees.
pub fn zeta_report(r: &RationalFunction, generator_degrees: &[u32]) -> ZetaReport {
    let zeta = &RationalFunction::one() - r;
    let mut notes = Vec::new();
    if !zeta.value_at_zero().is_zero() {
        notes.push(format!("zeta(0) = {}", format_rational(&zeta.value_at_zero())));
    }

    // factors (1 + d t) of the denominator, matched greedily against the degree list
    let mut rest = zeta.den().clone();
    let mut matched: Vec<u32> = Vec::new();
    let mut pool: Vec<u32> = Vec::new();
    let mut degrees = generator_degrees.to_vec();
    degrees.sort_unstable();
    for &d in &degrees {
        let f = UniPoly::linear_unit(Rational::from_integer(d.into()));
        if rest.degree().unwrap_or(0) > 0 && f.divides(&rest) {
            rest = rest.div_rem(&f).0;
            matched.push(d);
        } else {
            pool.push(d);
        }
    }
    let pole_check = rest.degree().unwrap_or(0) == 0;
    if !pole_check {
        notes.push(format!("denominator factor {} is not a product of (1 + d t) over generator degrees", rest));
    }

    let mut used = matched.clone();
    let mut numerator_a = None;
    let mut nonneg_check = false;
    if pole_check {
        // smallest superset of the matched factors giving the expected numerator shape
        let pool = if pool.len() > 12 { pool[..12].to_vec() } else { pool };
        let mut first: Option<(Vec<u32>, UniPoly)> = None;
        for extra in submultisets(&pool) {
            let mut subset = matched.clone();
            subset.extend(extra);
            subset.sort_unstable();
            let Some((a, shape)) = numerator_for(&zeta, &subset) else {
                continue;
            };
            if shape {
                used = subset;
                numerator_a = Some(a);
                nonneg_check = true;
                break;
            }
            if first.is_none() {
                first = Some((subset, a));
            }
        }
        if !nonneg_check {
            if let Some((subset, a)) = first {
                notes.push(format!("no degree subset gives A with nonnegative integer coefficients and degree <= r; closest A = {a}"));
                used = subset;
                numerator_a = Some(a);
            }
        }
    }
    ZetaReport { zeta, degree_sequence_used: used, numerator_a, pole_check, nonneg_check, notes }
}
