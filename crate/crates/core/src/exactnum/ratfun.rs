use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ExactError, Rational, UniPoly};

/// Reduced quotient of two polynomials in `t`, normalized so that the
/// denominator has constant term 1.
///
/// Every function the engine produces is regular at `t = 0`, so this form is
/// canonical: two functions are equal iff their numerators and denominators are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Reduce `num / den` to canonical form.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if den.coeff(0).is_zero() {
            return Err(ExactError::NonUnitConstantTerm);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let c0 = Rational::one() / den.coeff(0);
        Ok(RationalFunction { num: num.scale(&c0), den: den.scale(&c0) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::one() }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn value_at_zero(&self) -> Rational {
        self.num.coeff(0)
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t) / d)
        }
    }

    /// Maclaurin coefficients up to and including `t^order`.
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut c = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree().unwrap_or(0)) {
                c -= self.den.coeff(j) * &out[k - j];
            }
            out.push(c);
        }
        TruncatedSeries { coeffs: out }
    }

    fn combine(&self, rhs: &Self, f: impl Fn(&UniPoly, &UniPoly) -> UniPoly) -> Self {
        let num = f(&(&self.num * &rhs.den), &(&rhs.num * &self.den));
        let den = &self.den * &rhs.den;
        Self::new(num, den).expect("product of unit-constant denominators")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of unit-constant denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

/// Power series truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rint;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn normalize_examples() {
        let f = RationalFunction::new(p(&[0, 2, 4]), p(&[2, 4])).unwrap();
        assert_eq!(f.num(), &p(&[0, 1]));
        assert_eq!(f.den(), &p(&[1]));

        let z = RationalFunction::new(UniPoly::zero(), p(&[1, 1])).unwrap();
        assert_eq!((z.num().clone(), z.den().clone()), (UniPoly::zero(), p(&[1])));

        let ci = RationalFunction::new(p(&[0, 0, 6]), &p(&[1, 2]) * &p(&[1, 3])).unwrap();
        assert_eq!(ci.num(), &p(&[0, 0, 6]));
        assert_eq!(ci.den(), &p(&[1, 5, 6]));
    }

    #[test]
    fn normalize_errors() {
        assert_eq!(RationalFunction::new(p(&[1]), UniPoly::zero()), Err(ExactError::ZeroDenominator));
        assert_eq!(RationalFunction::new(p(&[1]), p(&[0, 1])), Err(ExactError::NonUnitConstantTerm));
    }

    #[test]
    fn series_examples() {
        let f = RationalFunction::new(p(&[1]), p(&[1, 2])).unwrap();
        assert_eq!(ints(&f.to_series(3)), vec![1, -2, 4, -8]);
        let g = RationalFunction::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(ints(&g.to_series(2)), vec![0, 1, -1]);
        let h = RationalFunction::new(p(&[0, 0, 6]), p(&[1, 5, 6])).unwrap();
        assert_eq!(ints(&h.to_series(3)), vec![0, 0, 6, -30]);
    }

    #[test]
    fn series_of_ci_against_product_of_geometric_series() {
        // 6t^2 * sum (-2t)^i * sum (-3t)^j, multiplied out term by term.
        let mut expected = vec![rint(0); 8];
        for i in 0..8usize {
            for j in 0..8usize {
                if i + j + 2 < 8 {
                    expected[i + j + 2] += rint(6) * rint(-2).pow(i as i32) * rint(-3).pow(j as i32);
                }
            }
        }
        let h = RationalFunction::new(p(&[0, 0, 6]), &p(&[1, 2]) * &p(&[1, 3])).unwrap();
        assert_eq!(h.to_series(7).coeffs(), expected.as_slice());
    }

    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (prop::collection::vec(-4i64..=4, 0..4), prop::collection::vec(-4i64..=4, 0..3)).prop_map(|(n, mut d)| {
            d.insert(0, 1);
            RationalFunction::new(UniPoly::from_ints(&n), UniPoly::from_ints(&d)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn series_times_denominator_recovers_numerator(f in small_rf(), order in 0usize..8) {
            let s = UniPoly::new(f.to_series(order).coeffs().to_vec());
            let prod = &s * f.den();
            for k in 0..=order {
                prop_assert_eq!(prod.coeff(k), f.num().coeff(k));
            }
        }

        #[test]
        fn normalize_is_idempotent(f in small_rf()) {
            let again = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
            prop_assert_eq!(again, f);
        }

        #[test]
        fn field_ops_consistent(f in small_rf(), g in small_rf()) {
            let sum = &f + &g;
            prop_assert_eq!(&sum - &g, f.clone());
            let prod = &f * &g;
            let x = rint(1) / rint(7);
            if let (Some(a), Some(b), Some(c)) = (f.eval(&x), g.eval(&x), prod.eval(&x)) {
                prop_assert_eq!(a * b, c);
            }
        }
    }
}
