//! The min-lex valuation on dehomogenized polynomials and finite samples of the
//! graded semigroup `{(v, s, t) : v in v((I^t)_s)}`.
//!
//! A polynomial is dehomogenized by deleting the exponent of the dehomogenizing
//! variable; its value is the lexicographically smallest surviving exponent,
//! where lex compares variables in the configured priority order. Values are
//! always laid out by variable index (dehomogenizing variable omitted).

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::exactnum::Rational;
use crate::polyring::{generating_degree, graded_piece_basis_with_budget, Budget, ExponentVector, GradedPieceBasis, HomogeneousIdeal, MultiPoly, RingError};

/// Lattice point in `Z^n_{>=0}`.
pub type LatticePoint = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("the zero polynomial has no valuation")]
    ZeroPolynomial,
    #[error("invalid valuation configuration: {0}")]
    InvalidConfig(String),
    #[error("degree bound {s_max} is below t_max * generating degree = {required}")]
    DegreeBoundTooSmall { s_max: u32, required: u32 },
    #[error("t_max must be at least 1")]
    ZeroLevel,
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuationConfig {
    nvars: usize,
    dehomogenize_index: usize,
    priority: Vec<usize>,
}

impl ValuationConfig {
    /// Dehomogenize at `x_0`, compare `x_1, ..., x_n` in index order.
    pub fn standard(nvars: usize) -> Self {
        ValuationConfig { nvars, dehomogenize_index: 0, priority: (1..nvars).collect() }
    }

    /// `priority` lists the non-dehomogenizing variables, most significant first.
    pub fn new(nvars: usize, dehomogenize_index: usize, priority: Vec<usize>) -> Result<Self, ValuationError> {
        if dehomogenize_index >= nvars {
            return Err(ValuationError::InvalidConfig(format!("dehomogenizing index {dehomogenize_index} out of range for {nvars} variables")));
        }
        let mut expected: Vec<usize> = (0..nvars).filter(|&i| i != dehomogenize_index).collect();
        let mut sorted = priority.clone();
        sorted.sort_unstable();
        if sorted != expected {
            expected.sort_unstable();
            return Err(ValuationError::InvalidConfig(format!("priority {priority:?} is not a permutation of {expected:?}")));
        }
        Ok(ValuationConfig { nvars, dehomogenize_index, priority })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dehomogenize_index(&self) -> usize {
        self.dehomogenize_index
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Comparison key of an exponent vector: its non-dehomogenizing entries in priority order.
    pub fn compare_key(&self, exp: &ExponentVector) -> Vec<u32> {
        self.priority.iter().map(|&i| exp.entries()[i]).collect()
    }

    /// Value coordinates of an exponent vector: drop the dehomogenizing entry.
    pub fn value_coords(&self, exp: &ExponentVector) -> LatticePoint {
        exp.entries().iter().enumerate().filter(|&(i, _)| i != self.dehomogenize_index).map(|(_, &a)| a).collect()
    }

    /// Reinsert `s - |a|` at the dehomogenizing slot, so a monomial of degree
    /// `s` maps back to its own exponent vector.
    pub fn tau(&self, value: &[u32], s: u32) -> LatticePoint {
        let sum: u32 = value.iter().sum();
        debug_assert!(sum <= s);
        let mut out = value.to_vec();
        out.insert(self.dehomogenize_index, s - sum);
        out
    }
}

/// Min-lex exponent of `p` after dehomogenization.
pub fn value_of(p: &MultiPoly, cfg: &ValuationConfig) -> Result<LatticePoint, ValuationError> {
    // Terms that collide after dehomogenizing are merged before taking the minimum.
    let mut dehom: BTreeMap<Vec<u32>, (LatticePoint, Rational)> = BTreeMap::new();
    for (e, c) in p.terms() {
        let slot = dehom.entry(cfg.compare_key(e)).or_insert_with(|| (cfg.value_coords(e), Rational::zero()));
        slot.1 += c;
    }
    dehom.into_values().find(|(_, c)| !c.is_zero()).map(|(v, _)| v).ok_or(ValuationError::ZeroPolynomial)
}

/// Values of a triangular basis; has one element per basis vector.
pub fn value_image(space: &GradedPieceBasis, cfg: &ValuationConfig) -> BTreeSet<LatticePoint> {
    space.basis.iter().map(|b| value_of(b, cfg).expect("basis elements are nonzero")).collect()
}

/// Valuation on the ring with one more variable `x_new`: for `f = x_new^e g`
/// with `x_new` not dividing `g`, the value is `(v(g|_{x_new = 0}), e)`.
///
/// Realized as min-lex with the new variable compared first and stored last.
pub fn extend_valuation(cfg: &ValuationConfig) -> ValuationConfig {
    let mut priority = Vec::with_capacity(cfg.priority.len() + 1);
    priority.push(cfg.nvars);
    priority.extend_from_slice(&cfg.priority);
    ValuationConfig { nvars: cfg.nvars + 1, dehomogenize_index: cfg.dehomogenize_index, priority }
}

/// Exact value set `v((I^t)_s)` for every `s` in a range, at a fixed power `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSample {
    pub t_level: u32,
    pub s_range: (u32, u32),
    /// `(value, s)` pairs.
    pub points: BTreeSet<(LatticePoint, u32)>,
}

impl SemigroupSample {
    /// The `tau` images in `Z^{n+1}`, sorted.
    pub fn tau_points(&self, cfg: &ValuationConfig) -> Vec<LatticePoint> {
        let mut pts: Vec<LatticePoint> = self.points.iter().map(|(v, s)| cfg.tau(v, *s)).collect();
        pts.sort();
        pts
    }

    pub fn values_at(&self, s: u32) -> BTreeSet<LatticePoint> {
        self.points.iter().filter(|(_, d)| *d == s).map(|(v, _)| v.clone()).collect()
    }
}

/// Sample the graded semigroup for `1 <= t <= t_max`, `0 <= s <= s_max`.
pub fn sample_semigroup(
    ideal: &HomogeneousIdeal,
    cfg: &ValuationConfig,
    t_max: u32,
    s_max: u32,
    budget: &Budget,
) -> Result<Vec<SemigroupSample>, ValuationError> {
    if t_max == 0 {
        return Err(ValuationError::ZeroLevel);
    }
    if cfg.nvars() != ideal.nvars() {
        return Err(ValuationError::InvalidConfig(format!("configuration has {} variables, ideal has {}", cfg.nvars(), ideal.nvars())));
    }
    let required = t_max * generating_degree(ideal);
    if s_max < required {
        return Err(ValuationError::DegreeBoundTooSmall { s_max, required });
    }
    let jobs: Vec<(u32, u32)> = (1..=t_max).flat_map(|t| (0..=s_max).map(move |s| (t, s))).collect();
    let images: Vec<((u32, u32), BTreeSet<LatticePoint>)> = jobs
        .par_iter()
        .map(|&(t, s)| {
            let basis = graded_piece_basis_with_budget(ideal, t, s, cfg, budget)?;
            Ok(((t, s), value_image(&basis, cfg)))
        })
        .collect::<Result<_, ValuationError>>()?;

    let mut out: Vec<SemigroupSample> =
        (1..=t_max).map(|t| SemigroupSample { t_level: t, s_range: (0, s_max), points: BTreeSet::new() }).collect();
    for ((t, s), values) in images {
        let sample = &mut out[(t - 1) as usize];
        sample.points.extend(values.into_iter().map(|v| (v, s)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rint;
    use crate::polyring::graded_piece_basis;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn value_examples() {
        let cfg = ValuationConfig::standard(3);
        let m = MultiPoly::from_terms(3, [(vec![2, 1, 3], rint(5))]);
        assert_eq!(value_of(&m, &cfg).unwrap(), vec![1, 3]);
        let p = &MultiPoly::constant(3, rint(1)) + &x(3, 1);
        assert_eq!(value_of(&p, &cfg).unwrap(), vec![0, 0]);
        let q = &(&x(3, 1) * &x(3, 1)) + &(&x(3, 1) * &x(3, 2));
        assert_eq!(value_of(&q, &cfg).unwrap(), vec![1, 1]);
        assert_eq!(value_of(&MultiPoly::zero(3), &cfg), Err(ValuationError::ZeroPolynomial));
        // x0 - 1 vanishes after dehomogenizing
        let r = &x(3, 0) - &MultiPoly::constant(3, rint(1));
        assert_eq!(value_of(&r, &cfg), Err(ValuationError::ZeroPolynomial));
    }

    #[test]
    fn config_validation() {
        assert!(ValuationConfig::new(3, 0, vec![2, 1]).is_ok());
        assert!(ValuationConfig::new(3, 0, vec![0, 1]).is_err());
        assert!(ValuationConfig::new(3, 3, vec![0, 1]).is_err());
        assert!(ValuationConfig::new(3, 1, vec![0, 2]).is_ok());
    }

    #[test]
    fn value_image_examples() {
        let cfg = ValuationConfig::standard(3);
        let basis = GradedPieceBasis { power: 1, degree: 1, basis: vec![&MultiPoly::constant(3, rint(1)) + &x(3, 1), x(3, 1)] };
        assert_eq!(value_image(&basis, &cfg), BTreeSet::from([vec![0, 0], vec![1, 0]]));

        let h = HomogeneousIdeal::monomial(3, &[vec![1, 1, 0]]).unwrap();
        assert_eq!(value_image(&graded_piece_basis(&h, 1, 2, &cfg), &cfg), BTreeSet::from([vec![1, 0]]));
        assert_eq!(value_image(&graded_piece_basis(&h, 1, 3, &cfg), &cfg), BTreeSet::from([vec![1, 0], vec![2, 0], vec![1, 1]]));
    }

    #[test]
    fn extended_valuation_examples() {
        let ext = extend_valuation(&ValuationConfig::standard(3));
        let m = MultiPoly::from_terms(4, [(vec![0, 1, 0, 2], rint(1))]);
        assert_eq!(value_of(&m, &ext).unwrap(), vec![1, 0, 2]);
        let p = &x(4, 1) + &x(4, 3);
        assert_eq!(value_of(&p, &ext).unwrap(), vec![1, 0, 0]);
        assert_eq!(value_of(&MultiPoly::constant(4, rint(7)), &ext).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn semigroup_examples() {
        let cfg = ValuationConfig::standard(3);
        let h = HomogeneousIdeal::monomial(3, &[vec![1, 1, 0]]).unwrap();
        let sample = sample_semigroup(&h, &cfg, 1, 3, &Budget::default()).unwrap();
        let taus: BTreeSet<_> = sample[0].tau_points(&cfg).into_iter().collect();
        assert_eq!(taus, BTreeSet::from([vec![1, 1, 0], vec![2, 1, 0], vec![1, 2, 0], vec![1, 1, 1]]));

        let cfg2 = ValuationConfig::standard(2);
        let lin = HomogeneousIdeal::new(2, vec![&x(2, 0) + &x(2, 1)]).unwrap();
        let sample = sample_semigroup(&lin, &cfg2, 1, 2, &Budget::default()).unwrap();
        assert_eq!(sample[0].values_at(2), BTreeSet::from([vec![0], vec![1]]));
        let at2: BTreeSet<_> = sample[0].values_at(2).iter().map(|v| cfg2.tau(v, 2)).collect();
        assert_eq!(at2, BTreeSet::from([vec![2, 0], vec![1, 1]]));
        assert!(sample[0].values_at(0).is_empty());
    }

    #[test]
    fn semigroup_preconditions() {
        let cfg = ValuationConfig::standard(3);
        let h = HomogeneousIdeal::monomial(3, &[vec![1, 1, 0]]).unwrap();
        assert!(matches!(sample_semigroup(&h, &cfg, 2, 3, &Budget::default()), Err(ValuationError::DegreeBoundTooSmall { .. })));
        assert!(matches!(sample_semigroup(&h, &cfg, 0, 3, &Budget::default()), Err(ValuationError::ZeroLevel)));
        assert!(matches!(
            sample_semigroup(&h, &cfg, 2, 12, &Budget::new(50)),
            Err(ValuationError::Ring(RingError::BudgetExceeded { .. }))
        ));
    }

    fn general_ideal() -> HomogeneousIdeal {
        let n = 3;
        HomogeneousIdeal::new(n, vec![&(&x(n, 0) * &x(n, 0)) + &(&x(n, 1) * &x(n, 2)), &x(n, 0) * &x(n, 1)]).unwrap()
    }

    #[test]
    fn semigroup_additivity_and_absorption() {
        let ideal = general_ideal();
        let cfg = ValuationConfig::standard(3);
        let s_max = 6;
        let samples = sample_semigroup(&ideal, &cfg, 3, s_max, &Budget::default()).unwrap();
        let at = |t: u32, s: u32| samples[(t - 1) as usize].values_at(s);
        for t in 1..=2u32 {
            for u in 1..=(3 - t) {
                for s in 0..=s_max {
                    for r in 0..=(s_max - s) {
                        for a in at(t, s) {
                            for b in at(u, r) {
                                let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                                assert!(at(t + u, s + r).contains(&sum), "{a:?}+{b:?} missing at t={} s={}", t + u, s + r);
                            }
                        }
                    }
                }
            }
        }
        // multiplying by x_i moves tau points by e_i one degree higher
        for sample in &samples {
            let t = sample.t_level;
            for s in 0..s_max {
                let higher: BTreeSet<_> = at(t, s + 1).iter().map(|v| cfg.tau(v, s + 1)).collect();
                for v in at(t, s) {
                    let p = cfg.tau(&v, s);
                    for i in 0..3 {
                        let mut q = p.clone();
                        q[i] += 1;
                        assert!(higher.contains(&q));
                    }
                }
            }
        }
    }

    #[test]
    fn extension_value_sets_split_by_new_exponent() {
        let ideal = general_ideal();
        let cfg = ValuationConfig::standard(3);
        let ext_cfg = extend_valuation(&cfg);
        let ext = crate::polyring::extend_ideal(&ideal, 1);
        for j in 0..=5u32 {
            let lhs = value_image(&graded_piece_basis(&ext, 1, j, &ext_cfg), &ext_cfg);
            let mut rhs = BTreeSet::new();
            for i in 0..=j {
                for mut v in value_image(&graded_piece_basis(&ideal, 1, j - i, &cfg), &cfg) {
                    v.push(i);
                    rhs.insert(v);
                }
            }
            assert_eq!(lhs, rhs, "degree {j}");
        }
    }

    fn small_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, nvars), -3i64..=3), 1..5)
            .prop_map(move |terms| MultiPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, rint(c)))))
            .prop_filter("nonzero after dehomogenization", move |p| value_of(p, &ValuationConfig::standard(nvars)).is_ok())
    }

    proptest! {
        #[test]
        fn valuation_is_additive(p in small_poly(3), q in small_poly(3), perm in any::<bool>()) {
            let cfg = if perm { ValuationConfig::new(3, 0, vec![2, 1]).unwrap() } else { ValuationConfig::standard(3) };
            prop_assume!(value_of(&p, &cfg).is_ok() && value_of(&q, &cfg).is_ok());
            let vp = value_of(&p, &cfg).unwrap();
            let vq = value_of(&q, &cfg).unwrap();
            let vpq = value_of(&(&p * &q), &cfg).unwrap();
            let sum: Vec<u32> = vp.iter().zip(&vq).map(|(a, b)| a + b).collect();
            prop_assert_eq!(vpq, sum);
        }
    }
}
