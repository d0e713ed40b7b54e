//! Command line front end: ideal files in, JSON or a plain table out.

pub mod document;
pub mod parse;
mod plain;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use thiserror::Error;

use segre_core::exactnum::{format_rational, parse_rational, Rational};
use segre_core::pipeline::{compute_body, run_index, run_zeta, PipelineOptions};
use segre_core::polyhedra::{fiber_volume_function, slice_at_level, PiecewisePolynomial};
use segre_core::{ErrorClass, HomogeneousIdeal, ValuationConfig};

use document::{fill_zeta, BodySection, CheckJson, Document, FiberSection, IndexSection, InputEcho, OptionsEcho, SliceSection, TimingJson};
use parse::{parse_ideal_file, IdealFile, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_CONSISTENCY: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "segre", version, about = "Segre degrees and Segre zeta functions of homogeneous ideals via Newton-Okounkov bodies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full pipeline: body, fiber volume, integral, sigma and zeta
    Zeta(Common),
    /// The body, and optionally its slice at one level
    Body {
        #[command(flatten)]
        common: Common,
        /// slice level, integer or p/q
        #[arg(long)]
        level: Option<String>,
    },
    /// Piecewise polynomial volume of the slices
    FiberVolume(Common),
    /// Self-intersection index at level s
    Index {
        #[command(flatten)]
        common: Common,
        /// level, integer or p/q
        #[arg(long = "s")]
        s: String,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// ideal file, `-` reads stdin
    pub file: PathBuf,
    /// semigroup level for sampled bodies
    #[arg(long, default_value_t = 1)]
    pub tmax: u32,
    /// degree bound for sampling (default: tmax * generating degree + n + 2)
    #[arg(long)]
    pub smax: Option<u32>,
    /// series truncation order for zeta (default n + 3)
    #[arg(long)]
    pub order: Option<usize>,
    /// valuation priority, comma separated, overriding the file's `order:`
    #[arg(long, value_delimiter = ',')]
    pub vars_order: Option<Vec<String>>,
    /// skip the lattice-point oracle
    #[arg(long)]
    pub no_crosscheck: bool,
    /// JSON output (default)
    #[arg(long, conflicts_with = "plain")]
    pub json: bool,
    /// human-readable table
    #[arg(long)]
    pub plain: bool,
    /// write slice levels and volumes as CSV
    #[arg(long, value_name = "PATH")]
    pub export_plot: Option<PathBuf>,
    /// include stage timings (makes output nondeterministic)
    #[arg(long)]
    pub timings: bool,
    /// cap on monomial operations while sampling
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("bad value for {flag}: {value}")]
    BadValue { flag: &'static str, value: String },
    #[error(transparent)]
    Core(#[from] segre_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::BadValue { .. } => EXIT_PARSE,
            CliError::Core(e) => match e.class() {
                ErrorClass::Precondition => EXIT_PRECONDITION,
                ErrorClass::Budget => EXIT_BUDGET,
                ErrorClass::Consistency => EXIT_CONSISTENCY,
            },
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(io_err(path))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err(path))
    }
}

fn level_arg(flag: &'static str, value: &str) -> Result<Rational, CliError> {
    parse_rational(value).map_err(|_| CliError::BadValue { flag, value: value.to_string() })
}

struct Loaded {
    file: IdealFile,
    ideal: HomogeneousIdeal,
    cfg: ValuationConfig,
    opts: PipelineOptions,
}

fn load(common: &Common) -> Result<Loaded, CliError> {
    let text = read_input(&common.file)?;
    let file = parse_ideal_file(&text)?;
    let ideal = file.ideal()?;
    let cfg = file.valuation(common.vars_order.as_deref())?;
    let opts = PipelineOptions {
        t_max: common.tmax,
        s_max: common.smax,
        order: common.order,
        crosscheck: !common.no_crosscheck,
        ..PipelineOptions::default()
    };
    let opts = match common.budget {
        Some(budget) => PipelineOptions { budget, ..opts },
        None => opts,
    };
    Ok(Loaded { file, ideal, cfg, opts })
}

fn echo(l: &Loaded) -> InputEcho {
    let names = &l.file.variables;
    InputEcho {
        vars: names.clone(),
        generators: l.ideal.generators().iter().map(|g| l.file.display(g)).collect(),
        degrees: l.ideal.degrees().to_vec(),
        dehom: names[l.cfg.dehomogenize_index()].clone(),
        order: l.cfg.priority().iter().map(|&i| names[i].clone()).collect(),
        options: OptionsEcho {
            tmax: l.opts.t_max,
            smax: l.opts.s_max_for(&l.ideal),
            series_order: l.opts.order.unwrap_or(l.ideal.projective_dim() + 3),
            crosscheck: l.opts.crosscheck,
        },
    }
}

/// Plot rows from the first breakpoint to two past the last, in steps of 1/4.
pub fn plot_rows(f: &PiecewisePolynomial) -> Vec<(Rational, Rational)> {
    let zero = Rational::from_integer(0.into());
    let lo = f.breakpoints.first().cloned().unwrap_or_else(|| zero.clone());
    let hi = f.breakpoints.last().cloned().unwrap_or(zero) + Rational::from_integer(2.into());
    let step = Rational::new(1.into(), 4.into());
    let mut rows = Vec::new();
    let mut s = lo;
    while s <= hi {
        rows.push((s.clone(), f.eval(&s)));
        s += &step;
    }
    rows
}

fn export_plot(path: &Path, f: &PiecewisePolynomial) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e.into() })?;
    let write = |w: &mut csv::Writer<std::fs::File>, rec: [String; 3]| {
        w.write_record(&rec).map_err(|e| CliError::Io { path: path.display().to_string(), source: e.into() })
    };
    write(&mut w, ["level".into(), "volume".into(), "volume_f64".into()])?;
    for (s, v) in plot_rows(f) {
        let approx = v.to_f64().map(|x| x.to_string()).unwrap_or_default();
        write(&mut w, [format_rational(&s), format_rational(&v), approx])?;
    }
    w.flush().map_err(io_err(path))
}

fn timing(stage: &str, since: Instant) -> TimingJson {
    TimingJson { stage: stage.to_string(), seconds: since.elapsed().as_secs_f64() }
}

/// Build the document for one invocation.
pub fn execute(cli: &Cli) -> Result<Document, CliError> {
    let start = Instant::now();
    match &cli.command {
        Command::Zeta(common) => {
            let l = load(common)?;
            let r = run_zeta(&l.ideal, &l.cfg, &l.opts)?;
            let mut doc = Document::new("zeta", echo(&l), r.body.exact);
            fill_zeta(&mut doc, &r);
            if let Some(p) = &common.export_plot {
                export_plot(p, &r.fiber)?;
            }
            if common.timings {
                let mut t: Vec<TimingJson> = r.timings.iter().map(|(s, x)| TimingJson { stage: s.clone(), seconds: *x }).collect();
                t.push(timing("total", start));
                doc.timings = Some(t);
            }
            Ok(doc)
        }
        Command::Body { common, level } => {
            let l = load(common)?;
            let body = compute_body(&l.ideal, &l.cfg, &l.opts)?;
            let mut doc = Document::new("body", echo(&l), body.exact);
            if let Some(level) = level {
                let s = level_arg("--level", level)?;
                let slice = slice_at_level(&body.body, &s).map_err(segre_core::Error::from)?;
                doc.slice = Some(SliceSection::from(&slice));
            }
            if let Some(p) = &common.export_plot {
                export_plot(p, &fiber_volume_function(&body.body).map_err(segre_core::Error::from)?)?;
            }
            doc.body = Some(BodySection::from(&body));
            if common.timings {
                doc.timings = Some(vec![timing("total", start)]);
            }
            Ok(doc)
        }
        Command::FiberVolume(common) => {
            let l = load(common)?;
            let body = compute_body(&l.ideal, &l.cfg, &l.opts)?;
            let fiber = fiber_volume_function(&body.body).map_err(segre_core::Error::from)?;
            let mut doc = Document::new("fiber-volume", echo(&l), body.exact);
            let section = FiberSection::from(&fiber);
            let certified = section.certificates.iter().all(|c| c.passed);
            doc.checks.push(CheckJson {
                name: "interpolation_certificates".into(),
                passed: certified,
                detail: format!("{} fits", section.certificates.len()),
            });
            doc.body = Some(BodySection::from(&body));
            doc.fiber_volume = Some(section);
            if let Some(p) = &common.export_plot {
                export_plot(p, &fiber)?;
            }
            if common.timings {
                doc.timings = Some(vec![timing("total", start)]);
            }
            Ok(doc)
        }
        Command::Index { common, s } => {
            let l = load(common)?;
            let s = level_arg("--s", s)?;
            let r = run_index(&l.ideal, &l.cfg, &s, &l.opts)?;
            let mut doc = Document::new("index", echo(&l), r.exact);
            if r.exact {
                if let Some(f) = &r.formula {
                    doc.checks.push(CheckJson {
                        name: "index_matches_tail".into(),
                        passed: f == &r.index,
                        detail: format!("lattice {} vs tail {}", format_rational(&r.index), format_rational(f)),
                    });
                }
            }
            doc.index = Some(IndexSection::from(&r));
            if common.timings {
                doc.timings = Some(vec![timing("total", start)]);
            }
            Ok(doc)
        }
    }
}

fn common(cli: &Cli) -> &Common {
    match &cli.command {
        Command::Zeta(c) | Command::FiberVolume(c) => c,
        Command::Body { common, .. } | Command::Index { common, .. } => common,
    }
}

/// Print `doc` and return its exit code. A document with a failed check is
/// still printed before the nonzero code.
pub fn finish(doc: &Document, plain: bool, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let text = if plain { plain::render(doc) } else { serde_json::to_string_pretty(doc).expect("document serializes") + "\n" };
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_IO;
    }
    if doc.all_checks_pass() {
        return EXIT_OK;
    }
    let failed: Vec<&str> = doc.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let _ = writeln!(err, "error: consistency check failed: {}", failed.join(", "));
    EXIT_CONSISTENCY
}

pub fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match execute(cli) {
        Ok(doc) => finish(&doc, common(cli).plain, out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
