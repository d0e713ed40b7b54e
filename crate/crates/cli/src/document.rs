//! JSON result document. Field order is declaration order and every rational
//! is a `"p/q"` string, so equal runs print equal bytes.

use serde::Serialize;

use segre_core::exactnum::{format_rational, Rational, RationalFunction, UniPoly};
use segre_core::pipeline::{BodyResult, Check, IndexResult, ZetaResult};
use segre_core::polyhedra::{PiecewisePolynomial, PiecewisePolynomialJson, SlicePolytope, VPolyhedronJson};

pub const SCHEMA_VERSION: u32 = 1;

pub fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

#[derive(Debug, Serialize)]
pub struct Document {
    pub schema_version: u32,
    pub command: String,
    pub input: InputEcho,
    /// false whenever the body is a sampled inner approximation
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub body: Option<BodySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slice: Option<SliceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiber_volume: Option<FiberSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<RationalFunctionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ZetaSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crosscheck: Option<CrossCheckSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<IndexSection>,
    pub checks: Vec<CheckJson>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<TimingJson>>,
}

impl Document {
    pub fn new(command: &str, input: InputEcho, exact: bool) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input,
            exact,
            body: None,
            slice: None,
            fiber_volume: None,
            integral: None,
            sigma: None,
            zeta: None,
            crosscheck: None,
            index: None,
            checks: Vec::new(),
            warnings: Vec::new(),
            timings: None,
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub vars: Vec<String>,
    pub generators: Vec<String>,
    pub degrees: Vec<u32>,
    pub dehom: String,
    pub order: Vec<String>,
    pub options: OptionsEcho,
}

#[derive(Debug, Serialize)]
pub struct OptionsEcho {
    pub tmax: u32,
    pub smax: u32,
    pub series_order: usize,
    pub crosscheck: bool,
}

#[derive(Debug, Serialize)]
pub struct StabilizationJson {
    pub t_max: u32,
    pub stabilized: bool,
    pub stable_since: u32,
}

#[derive(Debug, Serialize)]
pub struct BodySection {
    pub exact: bool,
    pub vertex_count: usize,
    pub ray_count: usize,
    pub polyhedron: VPolyhedronJson,
    pub stabilization: Option<StabilizationJson>,
}

impl From<&BodyResult> for BodySection {
    fn from(b: &BodyResult) -> Self {
        BodySection {
            exact: b.exact,
            vertex_count: b.body.vertices.len(),
            ray_count: b.body.rays.len(),
            polyhedron: VPolyhedronJson::from(&b.body),
            stabilization: b.stabilization.as_ref().map(|s| StabilizationJson {
                t_max: s.t_max,
                stabilized: s.stabilized,
                stable_since: s.stable_since,
            }),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SliceSection {
    pub level: String,
    /// coordinates after dropping the first one
    pub vertices: Vec<Vec<String>>,
    pub normalized_volume: String,
}

impl From<&SlicePolytope> for SliceSection {
    fn from(s: &SlicePolytope) -> Self {
        SliceSection {
            level: format_rational(&s.level),
            vertices: s.vertices.iter().map(|v| strings(v)).collect(),
            normalized_volume: format_rational(&s.normalized_volume()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CertificateJson {
    pub from: String,
    pub to: Option<String>,
    pub samples: usize,
    pub check_level: String,
    pub check_value: String,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct FiberSection {
    #[serde(flatten)]
    pub function: PiecewisePolynomialJson,
    pub tail: Vec<String>,
    pub certificates: Vec<CertificateJson>,
}

impl From<&PiecewisePolynomial> for FiberSection {
    fn from(f: &PiecewisePolynomial) -> Self {
        FiberSection {
            function: PiecewisePolynomialJson::from(f),
            tail: strings(f.tail.coeffs()),
            certificates: f
                .certificates
                .iter()
                .map(|c| CertificateJson {
                    from: format_rational(&c.interval.0),
                    to: c.interval.1.as_ref().map(format_rational),
                    samples: c.fit.len(),
                    check_level: format_rational(&c.check.0),
                    check_value: format_rational(&c.check.1),
                    passed: f.eval(&c.check.0) == c.check.1,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RationalFunctionJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub display: String,
}

impl From<&RationalFunction> for RationalFunctionJson {
    fn from(r: &RationalFunction) -> Self {
        RationalFunctionJson { num: strings(r.num().coeffs()), den: strings(r.den().coeffs()), display: r.to_string() }
    }
}

#[derive(Debug, Serialize)]
pub struct ZetaSection {
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub display: String,
    pub series: Vec<String>,
    pub degree_sequence_used: Vec<u32>,
    pub numerator_a: Option<Vec<String>>,
    pub pole_check: bool,
    pub nonneg_check: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CrossCheckSection {
    /// "pass", "fail" or "skipped"
    pub status: String,
    pub sigma_oracle: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct IndexSection {
    pub level: String,
    pub value: String,
    pub exact: bool,
    /// the tail polynomial of the fiber volume at the same level
    pub formula: Option<String>,
}

impl From<&IndexResult> for IndexSection {
    fn from(r: &IndexResult) -> Self {
        IndexSection {
            level: format_rational(&r.level),
            value: format_rational(&r.index),
            exact: r.exact,
            formula: r.formula.as_ref().map(format_rational),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<&Check> for CheckJson {
    fn from(c: &Check) -> Self {
        CheckJson { name: c.name.clone(), passed: c.passed, detail: c.detail.clone() }
    }
}

#[derive(Debug, Serialize)]
pub struct TimingJson {
    pub stage: String,
    pub seconds: f64,
}

fn poly_strings(p: &UniPoly) -> Vec<String> {
    strings(p.coeffs())
}

/// Fill the zeta-specific sections of `doc` from a pipeline run.
pub fn fill_zeta(doc: &mut Document, r: &ZetaResult) {
    doc.body = Some(BodySection::from(&r.body));
    doc.fiber_volume = Some(FiberSection::from(&r.fiber));
    doc.integral = Some(RationalFunctionJson::from(&r.integral));
    doc.sigma = Some(strings(&r.sigma));
    let z = &r.zeta;
    doc.zeta = Some(ZetaSection {
        num: poly_strings(z.zeta.num()),
        den: poly_strings(z.zeta.den()),
        display: z.zeta.to_string(),
        series: strings(r.series.coeffs()),
        degree_sequence_used: z.degree_sequence_used.clone(),
        numerator_a: z.numerator_a.as_ref().map(poly_strings),
        pole_check: z.pole_check,
        nonneg_check: z.nonneg_check,
        notes: z.notes.clone(),
    });
    doc.crosscheck = Some(match &r.crosscheck {
        Some(c) => CrossCheckSection {
            status: if c.passed { "pass" } else { "fail" }.to_string(),
            sigma_oracle: Some(strings(&c.sigma_oracle.sigma)),
        },
        None => CrossCheckSection {
            status: "skipped".to_string(),
            sigma_oracle: None,
        },
    });
    doc.checks = r.checks.iter().map(CheckJson::from).collect();
    doc.warnings = r.warnings.clone();
}
