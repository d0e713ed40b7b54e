use rayon::prelude::*;

use num_traits::{One, Zero};

use super::body::slice_at_level;
use super::hull::VPolyhedron;
use super::PolyhedraError;
use crate::exactnum::{interpolate_polynomial, format_rational, Rational, UniPoly};

/// One interpolation: the points used for the fit and the extra sample that
/// confirmed it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitCertificate {
    /// `None` for the unbounded tail interval.
    pub interval: (Rational, Option<Rational>),
    pub fit: Vec<(Rational, Rational)>,
    pub check: (Rational, Rational),
}

/// Zero below `breakpoints[0]`, `pieces[i]` on `[breakpoints[i], breakpoints[i+1]]`,
/// `tail` from the last breakpoint on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    pub breakpoints: Vec<Rational>,
    pub pieces: Vec<UniPoly>,
    pub tail: UniPoly,
    pub certificates: Vec<FitCertificate>,
}

impl PiecewisePolynomial {
    pub fn eval(&self, s: &Rational) -> Rational {
        if s < &self.breakpoints[0] {
            return Rational::zero();
        }
        let last = self.breakpoints.last().unwrap();
        if s >= last {
            return self.tail.eval(s);
        }
        let i = self.breakpoints.windows(2).position(|w| s >= &w[0] && s < &w[1]).unwrap();
        self.pieces[i].eval(s)
    }

    /// Every `(interval, polynomial)` pair, the tail last with an open end.
    pub fn intervals(&self) -> Vec<(Rational, Option<Rational>, &UniPoly)> {
        let mut out: Vec<(Rational, Option<Rational>, &UniPoly)> = self
            .breakpoints
            .windows(2)
            .zip(&self.pieces)
            .map(|(w, p)| (w[0].clone(), Some(w[1].clone()), p))
            .collect();
        out.push((self.breakpoints.last().unwrap().clone(), None, &self.tail));
        out
    }
}

fn fit(samples: &[(Rational, Rational)], n: usize, interval: (Rational, Option<Rational>)) -> Result<(UniPoly, FitCertificate), PolyhedraError> {
    let poly = interpolate_polynomial(samples, n)?;
    let cert = FitCertificate { interval, fit: samples[..n + 1].to_vec(), check: samples[n + 1].clone() };
    Ok((poly, cert))
}

/// The exact slice-volume function `s -> Vol(P ∩ {sum = s})` of a body with
/// orthant recession in `R^{n+1}`.
pub fn fiber_volume_function(p: &VPolyhedron) -> Result<PiecewisePolynomial, PolyhedraError> {
    let n = p.ambient_dim.checked_sub(1).filter(|&n| n >= 1).ok_or(PolyhedraError::DimensionMismatch { expected: 2, found: p.ambient_dim })?;
    let mut breakpoints: Vec<Rational> = p.vertices.iter().map(|v| v.iter().sum()).collect();
    breakpoints.sort();
    breakpoints.dedup();
    if breakpoints.is_empty() {
        return Err(PolyhedraError::EmptyInput);
    }

    let volume = |s: &Rational| -> Result<(Rational, Rational), PolyhedraError> { Ok((s.clone(), slice_at_level(p, s)?.normalized_volume())) };
    let steps = Rational::from_integer((n as u64 + 3).into());

    let mut jobs: Vec<(Rational, Option<Rational>, Vec<Rational>)> = breakpoints
        .windows(2)
        .map(|w| {
            let xs = (1..=n + 2).map(|j| &w[0] + (&w[1] - &w[0]) * Rational::from_integer((j as u64).into()) / &steps).collect();
            (w[0].clone(), Some(w[1].clone()), xs)
        })
        .collect();
    let last = breakpoints.last().unwrap().clone();
    let tail_xs = (1..=n + 2).map(|j| &last + Rational::from_integer((j as u64).into())).collect();
    jobs.push((last.clone(), None, tail_xs));

    let fitted: Vec<(UniPoly, FitCertificate)> = jobs
        .into_par_iter()
        .map(|(lo, hi, xs)| {
            let samples = xs.iter().map(volume).collect::<Result<Vec<_>, _>>()?;
            fit(&samples, n, (lo, hi))
        })
        .collect::<Result<_, _>>()?;

    let mut pieces: Vec<UniPoly> = Vec::new();
    let mut certificates = Vec::new();
    for (poly, cert) in fitted {
        pieces.push(poly);
        certificates.push(cert);
    }
    let tail = pieces.pop().unwrap();

    if tail.degree() != Some(n) || !tail.leading().is_some_and(|c| c.is_one()) {
        return Err(PolyhedraError::TailNotMonic { tail: tail.display_in("s"), degree: n });
    }

    // the first piece must reproduce the slice at its left end, then pieces must glue
    let all: Vec<&UniPoly> = pieces.iter().chain(std::iter::once(&tail)).collect();
    let at_first = all[0].eval(&breakpoints[0]);
    let (_, at_first_true) = volume(&breakpoints[0])?;
    if at_first != at_first_true {
        return Err(PolyhedraError::Discontinuous { at: format_rational(&breakpoints[0]) });
    }
    for (i, b) in breakpoints.iter().enumerate().skip(1) {
        if all[i - 1].eval(b) != all[i].eval(b) {
            return Err(PolyhedraError::Discontinuous { at: format_rational(b) });
        }
    }

    Ok(PiecewisePolynomial { breakpoints, pieces, tail, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rint};
    use crate::polyhedra::{convex_hull, newton_polyhedron, orthant_rays};
    use crate::polyring::HomogeneousIdeal;
    use proptest::prelude::*;

    fn mono(nvars: usize, exps: &[&[u32]]) -> HomogeneousIdeal {
        HomogeneousIdeal::monomial(nvars, &exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let f = fiber_volume_function(&newton_polyhedron(&mono(3, &[&[1, 1, 0]])).unwrap()).unwrap();
        assert_eq!(f.breakpoints, vec![rint(2)]);
        assert!(f.pieces.is_empty());
        assert_eq!(f.tail, UniPoly::from_ints(&[4, -4, 1]));
        assert_eq!(f.eval(&rint(1)), rint(0));

        let f = fiber_volume_function(&newton_polyhedron(&mono(2, &[&[1, 0]])).unwrap()).unwrap();
        assert_eq!(f.tail, UniPoly::from_ints(&[-1, 1]));
        assert_eq!(f.breakpoints, vec![rint(1)]);

        let f = fiber_volume_function(&newton_polyhedron(&mono(3, &[&[2, 0, 0], &[0, 3, 0]])).unwrap()).unwrap();
        assert_eq!(f.breakpoints, vec![rint(2), rint(3)]);
        assert_eq!(f.tail, UniPoly::from_ints(&[-6, 0, 1]));
        // hand value from the slice test: 3/4 at s = 5/2
        assert_eq!(f.eval(&rat(5, 2)), rat(3, 4));
    }

    #[test]
    fn certificates_check_out() {
        let f = fiber_volume_function(&newton_polyhedron(&mono(3, &[&[2, 0, 1], &[0, 3, 0], &[1, 1, 1]])).unwrap()).unwrap();
        assert_eq!(f.certificates.len(), f.breakpoints.len());
        for c in &f.certificates {
            let (x, y) = &c.check;
            assert_eq!(&f.eval(x), y);
            for (x, y) in &c.fit {
                assert_eq!(&f.eval(x), y);
            }
        }
    }

    #[test]
    fn rejects_degenerate_dimension() {
        let p = convex_hull(&[vec![rint(1)]], &orthant_rays(1)).unwrap();
        assert!(fiber_volume_function(&p).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        // piecewise function agrees with direct slicing at arbitrary rational levels
        #[test]
        fn matches_direct_slices(raw in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..4), num in 0i64..40, den in 1i64..5) {
            let raw: Vec<Vec<u32>> = raw.into_iter().filter(|e| e.iter().sum::<u32>() > 0).collect();
            prop_assume!(!raw.is_empty());
            let i = HomogeneousIdeal::monomial(3, &raw).unwrap();
            let p = newton_polyhedron(&i).unwrap();
            let f = fiber_volume_function(&p).unwrap();
            let s = rat(num, den);
            prop_assert_eq!(f.eval(&s), slice_at_level(&p, &s).unwrap().normalized_volume());
        }
    }
}
