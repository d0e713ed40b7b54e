use num_traits::{One, Zero};

use super::SegreDegrees;
use crate::exactnum::{binomial, Rational};

/// Coefficients `(g_0, ..., g_n)` of a class `Σ g_i h^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowClass {
    pub coefficients: Vec<Rational>,
}

impl ShadowClass {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        ShadowClass { coefficients }
    }
}

/// `T_a(G)_i = Σ_{j <= i} binom(i,j) a^{i-j} g_j`.
pub fn t_transform(g: &ShadowClass, a: &Rational) -> ShadowClass {
    let n = g.coefficients.len();
    let mut powers = vec![Rational::one()];
    for k in 1..n {
        powers.push(&powers[k - 1] * a);
    }
    let coefficients = (0..n)
        .map(|i| {
            (0..=i).fold(Rational::zero(), |acc, j| {
                acc + Rational::from_integer(binomial(i as u64, j as u64)) * &powers[i - j] * &g.coefficients[j]
            })
        })
        .collect();
    ShadowClass { coefficients }
}

/// Multidegrees of the map given by `I_s`: `T_s` applied to the Segre degrees.
pub fn multidegrees(sig: &SegreDegrees, s: i64) -> ShadowClass {
    t_transform(&ShadowClass::new(sig.sigma.clone()), &Rational::from_integer(s.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rint;
    use proptest::prelude::*;

    fn shadow(v: &[i64]) -> ShadowClass {
        ShadowClass::new(v.iter().map(|&x| rint(x)).collect())
    }

    #[test]
    fn examples() {
        assert_eq!(t_transform(&shadow(&[1, 0, 0]), &rint(1)), shadow(&[1, 1, 1]));
        assert_eq!(t_transform(&shadow(&[1, -2, 4]), &rint(3)), shadow(&[1, 1, 1]));
        let sig = SegreDegrees { n: 2, sigma: vec![rint(1), rint(-2), rint(4)] };
        assert_eq!(multidegrees(&sig, 3), shadow(&[1, 1, 1]));
        assert_eq!(multidegrees(&sig, 4), shadow(&[1, 2, 4]));
        let empty = SegreDegrees { n: 3, sigma: vec![rint(1), rint(0), rint(0), rint(0)] };
        assert_eq!(multidegrees(&empty, 5), shadow(&[1, 5, 25, 125]));
    }

    proptest! {
        #[test]
        fn group_action(g in prop::collection::vec(-20i64..20, 1..6), a in -6i64..6, b in -6i64..6) {
            let g = shadow(&g);
            let ab = t_transform(&t_transform(&g, &rint(b)), &rint(a));
            prop_assert_eq!(ab, t_transform(&g, &rint(a + b)));
            prop_assert_eq!(t_transform(&t_transform(&g, &rint(a)), &rint(-a)), g);
        }
    }
}
