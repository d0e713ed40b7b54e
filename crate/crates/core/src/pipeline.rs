//! End-to-end runs: body, fiber volume, integral, Segre degrees and zeta
//! report, with the oracle cross-check on monomial input.

use std::time::Instant;

use crate::error::Error;
use crate::exactnum::{format_rational, Rational, RationalFunction, TruncatedSeries};
use crate::polyhedra::{body_from_samples, fiber_volume_function, newton_polyhedron, PiecewisePolynomial, VPolyhedron};
use crate::polyring::{extend_ideal, generating_degree, Budget, HomogeneousIdeal, DEFAULT_BUDGET};
use crate::segre::{
    density_integral, density_integral_unchecked, intersection_index_monomial, rational_index, sigma_by_interpolation, sigma_from_integral,
    spurious_poles, zeta_report, SegreDegrees, ZetaReport,
};
use crate::valuation::{extend_valuation, sample_semigroup, ValuationConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Highest power of the ideal sampled for non-monomial input.
    pub t_max: u32,
    /// Degree bound for sampling; defaults to `t_max * d + n + 2`.
    pub s_max: Option<u32>,
    /// Truncation order of the reported series; defaults to `n + 3`.
    pub order: Option<usize>,
    pub crosscheck: bool,
    pub budget: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { t_max: 1, s_max: None, order: None, crosscheck: true, budget: DEFAULT_BUDGET }
    }
}

impl PipelineOptions {
    pub fn s_max_for(&self, ideal: &HomogeneousIdeal) -> u32 {
        self.s_max.unwrap_or(self.t_max * generating_degree(ideal) + ideal.projective_dim() as u32 + 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub t_max: u32,
    pub stabilized: bool,
    pub stable_since: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BodyResult {
    pub body: VPolyhedron,
    /// True for the Newton polyhedron of a monomial ideal; sampled bodies are
    /// inner approximations.
    pub exact: bool,
    pub stabilization: Option<Stabilization>,
    /// Hulls at each sampled level, for monotonicity checks.
    pub per_level: Vec<VPolyhedron>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub sigma_integral: Vec<Rational>,
    pub sigma_oracle: SegreDegrees,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct ZetaResult {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub generating_degree: u32,
    pub body: BodyResult,
    pub fiber: PiecewisePolynomial,
    /// `1 - ζ(t)`
    pub integral: RationalFunction,
    /// Series coefficients `0..=n` of the integral; integral when the body is exact.
    pub sigma: Vec<Rational>,
    pub zeta: ZetaReport,
    pub series: TruncatedSeries,
    pub crosscheck: Option<CrossCheck>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub timings: Vec<(String, f64)>,
}

impl ZetaResult {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn validate(ideal: &HomogeneousIdeal) -> Result<(), Error> {
    if ideal.degrees().contains(&0) {
        return Err(Error::Precondition("a generator has degree 0, the ideal is the whole ring".into()));
    }
    Ok(())
}

/// Newton polyhedron for monomial input, the sampled inner approximation otherwise.
pub fn compute_body(ideal: &HomogeneousIdeal, cfg: &ValuationConfig, opts: &PipelineOptions) -> Result<BodyResult, Error> {
    validate(ideal)?;
    if ideal.is_monomial() {
        let body = newton_polyhedron(ideal)?;
        return Ok(BodyResult { body: body.clone(), exact: true, stabilization: None, per_level: vec![body] });
    }
    let budget = Budget::new(opts.budget);
    let samples = sample_semigroup(ideal, cfg, opts.t_max, opts.s_max_for(ideal), &budget)?;
    let approx = body_from_samples(&samples, cfg)?;
    Ok(BodyResult {
        body: approx.body,
        exact: false,
        stabilization: Some(Stabilization { t_max: approx.t_max, stabilized: approx.stabilized, stable_since: approx.stable_since }),
        per_level: approx.per_level,
    })
}

/// Fiber volume and `1 - ζ` of a body. Spurious poles are an error for exact
/// bodies and are returned as warnings otherwise.
pub fn integral_of_body(body: &BodyResult, degrees: &[u32]) -> Result<(PiecewisePolynomial, RationalFunction, Vec<String>), Error> {
    let n = body.body.ambient_dim - 1;
    let fiber = fiber_volume_function(&body.body)?;
    if body.exact {
        let r = density_integral(&fiber, n, degrees)?;
        return Ok((fiber, r, Vec::new()));
    }
    let r = density_integral_unchecked(&fiber, n)?;
    let warnings = spurious_poles(&r, degrees).into_iter().map(|p| format!("spurious pole {p} (inexact body)")).collect();
    Ok((fiber, r, warnings))
}

fn render(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

pub fn run_zeta(ideal: &HomogeneousIdeal, cfg: &ValuationConfig, opts: &PipelineOptions) -> Result<ZetaResult, Error> {
    let mut timings = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut Vec<(String, f64)>| {
        timings.push((name.to_string(), clock.elapsed().as_secs_f64()));
        clock = Instant::now();
    };

    let n = ideal.projective_dim();
    let degrees = ideal.degrees().to_vec();
    let d = generating_degree(ideal);
    let body = compute_body(ideal, cfg, opts)?;
    lap("body", &mut timings);
    let (fiber, integral, mut warnings) = integral_of_body(&body, &degrees)?;
    lap("integral", &mut timings);

    let mut checks = Vec::new();
    let sigma = match sigma_from_integral(&integral, n) {
        Ok(s) => s.sigma,
        Err(e) if !body.exact => {
            warnings.push(format!("{e} (inexact body)"));
            integral.to_series(n).coeffs().to_vec()
        }
        Err(e) => return Err(e.into()),
    };

    let zeta = zeta_report(&integral, &degrees);
    let order = opts.order.unwrap_or(n + 3);
    let series = zeta.zeta.to_series(order);

    let certified = fiber.certificates.iter().all(|c| fiber.eval(&c.check.0) == c.check.1);
    let tail = SegreDegrees { n, sigma: sigma.clone() }.tail_polynomial();
    let tail_ok = tail == fiber.tail;
    let tail_detail = format!("tail {} vs {}", fiber.tail.display_in("s"), tail.display_in("s"));
    let pole_detail = zeta.notes.join("; ");
    if body.exact {
        checks.push(Check::new("interpolation_certificates", certified, format!("{} fits", fiber.certificates.len())));
        checks.push(Check::new("tail_consistency", tail_ok, tail_detail));
        checks.push(Check::new("pole_check", zeta.pole_check, pole_detail.clone()));
        checks.push(Check::new("nonneg_check", zeta.nonneg_check, pole_detail));
    } else {
        if !certified {
            checks.push(Check::new("interpolation_certificates", false, "a fit disagrees with its extra sample"));
        }
        for (ok, what) in [(tail_ok, tail_detail), (zeta.pole_check, "pole check failed".into()), (zeta.nonneg_check, "numerator check failed".into())] {
            if !ok {
                warnings.push(format!("{what} (inexact body)"));
            }
        }
    }
    lap("checks", &mut timings);

    let crosscheck = if opts.crosscheck && ideal.is_monomial() {
        let oracle = sigma_by_interpolation(ideal)?;
        let passed = oracle.sigma == sigma;
        checks.push(Check::new("oracle", passed, format!("integral [{}] vs interpolation [{}]", render(&sigma), render(&oracle.sigma))));
        lap("oracle", &mut timings);
        Some(CrossCheck { sigma_integral: sigma.clone(), sigma_oracle: oracle, passed })
    } else {
        None
    };

    Ok(ZetaResult {
        n,
        degrees,
        generating_degree: d,
        body,
        fiber,
        integral,
        sigma,
        zeta,
        series,
        crosscheck,
        checks,
        warnings,
        timings,
    })
}

/// Run the integral for `I` and for `I` in `extra` more variables and compare:
/// exactly on monomial input, up to the series order otherwise.
pub fn zeta_extension_check(ideal: &HomogeneousIdeal, cfg: &ValuationConfig, extra: usize, opts: &PipelineOptions) -> Result<bool, Error> {
    if extra == 0 {
        return Ok(true);
    }
    let degrees = ideal.degrees();
    let base = integral_of_body(&compute_body(ideal, cfg, opts)?, degrees)?.1;
    let big = extend_ideal(ideal, extra);
    let mut big_cfg = cfg.clone();
    for _ in 0..extra {
        big_cfg = extend_valuation(&big_cfg);
    }
    let other = integral_of_body(&compute_body(&big, &big_cfg, opts)?, degrees)?.1;
    if ideal.is_monomial() {
        return Ok(base == other);
    }
    let order = opts.order.unwrap_or(ideal.projective_dim() + 3);
    Ok(base.to_series(order) == other.to_series(order))
}

/// The index at level `s` (integer or rational): from lattice points for
/// monomial input, from the sampled body's slice otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexResult {
    pub level: Rational,
    pub index: Rational,
    pub exact: bool,
    /// `Σ binom(n,j) σ_j s^{n-j}` from the integral path, when `s >= d`.
    pub formula: Option<Rational>,
}

pub fn run_index(ideal: &HomogeneousIdeal, cfg: &ValuationConfig, s: &Rational, opts: &PipelineOptions) -> Result<IndexResult, Error> {
    validate(ideal)?;
    let d = Rational::from_integer(generating_degree(ideal).into());
    if s < &d {
        return Err(Error::Precondition(format!("level {} is below the generating degree {}", format_rational(s), d)));
    }
    let body = compute_body(ideal, cfg, opts)?;
    let index = if ideal.is_monomial() {
        if s.is_integer() {
            intersection_index_monomial(ideal, u32::try_from(s.to_integer()).map_err(|_| Error::Precondition("level too large".into()))?)?
        } else {
            rational_index(ideal, s)?
        }
    } else {
        crate::polyhedra::slice_at_level(&body.body, s)?.normalized_volume()
    };
    let (fiber, _, _) = integral_of_body(&body, ideal.degrees())?;
    let formula = (!fiber.tail.is_zero()).then(|| fiber.tail.eval(s));
    Ok(IndexResult { level: s.clone(), index, exact: body.exact, formula })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rint, UniPoly};
    use crate::polyring::MultiPoly;

    fn mono(nvars: usize, exps: &[&[u32]]) -> HomogeneousIdeal {
        HomogeneousIdeal::monomial(nvars, &exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn hypersurface_run() {
        let i = mono(3, &[&[1, 1, 0]]);
        let r = run_zeta(&i, &ValuationConfig::standard(3), &PipelineOptions::default()).unwrap();
        assert!(r.all_checks_pass(), "{:?}", r.checks);
        assert_eq!(r.zeta.zeta, RationalFunction::new(UniPoly::from_ints(&[0, 2]), UniPoly::from_ints(&[1, 2])).unwrap());
        assert_eq!(r.sigma, vec![rint(1), rint(-2), rint(4)]);
        assert!(r.crosscheck.unwrap().passed);
    }

    #[test]
    fn linear_form_is_approximate_but_right() {
        let i = HomogeneousIdeal::new(2, vec![&MultiPoly::var(2, 0) + &MultiPoly::var(2, 1)]).unwrap();
        let opts = PipelineOptions { t_max: 2, ..Default::default() };
        let r = run_zeta(&i, &ValuationConfig::standard(2), &opts).unwrap();
        assert!(!r.body.exact);
        assert!(r.body.stabilization.as_ref().unwrap().stabilized);
        assert_eq!(r.integral, RationalFunction::new(UniPoly::one(), UniPoly::from_ints(&[1, 1])).unwrap());
        assert!(r.warnings.is_empty(), "{:?}", r.warnings);
    }

    #[test]
    fn extension_examples() {
        let opts = PipelineOptions::default();
        let i = mono(3, &[&[1, 1, 0]]);
        let cfg = ValuationConfig::standard(3);
        assert!(zeta_extension_check(&i, &cfg, 1, &opts).unwrap());
        assert!(zeta_extension_check(&i, &cfg, 0, &opts).unwrap());
        let j = mono(2, &[&[1, 0]]);
        assert!(zeta_extension_check(&j, &ValuationConfig::standard(2), 1, &opts).unwrap());
        let lin = HomogeneousIdeal::new(2, vec![&MultiPoly::var(2, 0) + &MultiPoly::var(2, 1)]).unwrap();
        assert!(zeta_extension_check(&lin, &ValuationConfig::standard(2), 1, &opts).unwrap());
    }

    #[test]
    fn index_runs() {
        let i = mono(3, &[&[1, 1, 0]]);
        let cfg = ValuationConfig::standard(3);
        let r = run_index(&i, &cfg, &rint(4), &PipelineOptions::default()).unwrap();
        assert_eq!((r.index, r.formula), (rint(4), Some(rint(4))));
        let r = run_index(&i, &cfg, &rat(5, 2), &PipelineOptions::default()).unwrap();
        assert_eq!((r.index, r.formula), (rat(1, 4), Some(rat(1, 4))));
        assert!(run_index(&i, &cfg, &rint(1), &PipelineOptions::default()).is_err());
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let i = mono(2, &[&[0, 0]]);
        assert!(matches!(run_zeta(&i, &ValuationConfig::standard(2), &PipelineOptions::default()), Err(Error::Precondition(_))));
    }
}
