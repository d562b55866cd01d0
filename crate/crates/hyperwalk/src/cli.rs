//! Command-line front end.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperwalk_core::bounds::{self, closed_form_threshold, closed_form_upper, walk_lower_bound, DsBound};
use hyperwalk_core::exact::{mixing_time, WalkOptions, Walker, DEFAULT_BIT_BUDGET};
use hyperwalk_core::montecarlo::{fixed_point_curve, SimConfig};
use hyperwalk_core::ratio::{parse_rational, Rational};
use num_traits::Zero;
use num_bigint::BigUint;
use hyperwalk_core::spectrum::{aggregate_spectrum, spectrum, total_multiplicity};
use hyperwalk_core::{Error, WalkSpec};
use serde::Serialize;

use crate::output::{self, SpectrumRecord, SpectrumSummary};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "hyperwalk", version, about = "Spectra, exact distances, bounds and simulation for top-with-random shuffles")]
pub struct Cli {
    /// Worker threads for convolution and simulation (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of the transition operator with multiplicities.
    Spectrum {
        #[command(flatten)]
        walk: WalkArgs,
        /// Merge lines with equal eigenvalues.
        #[arg(long)]
        aggregate: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Total variation distance to uniform for k = 0..=K.
    TvCurve {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long)]
        k_max: usize,
        #[command(flatten)]
        exact: ExactArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower bound, optional exact distance, spectral and closed-form upper bounds.
    BoundsCurve {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, required_unless_present = "c")]
        k_max: Option<u64>,
        /// Add the exact distance column (needs the group to be enumerable).
        #[arg(long)]
        with_tv: bool,
        /// Evaluate at k = ceil(t(n, c)) for these c instead of k = 0..=K.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Option<Vec<f64>>,
        /// Time scale for --c: n ln n + c n, or (n - 1/2)(ln n + c).
        #[arg(long, value_enum, default_value_t = Param::NLogN)]
        param: Param,
        #[command(flatten)]
        exact: ExactArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// First k where the distance, the lower bound and the spectral bound reach a threshold.
    MixingTime {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, default_value_t = 0.25)]
        threshold: f64,
        #[arg(long, default_value_t = 1000)]
        k_max: usize,
        #[command(flatten)]
        exact: ExactArgs,
    },
    /// Monte Carlo estimate of the mean number of fixed points of |x_k|.
    Simulate {
        #[command(flatten)]
        walk: WalkArgs,
        /// Step counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run self-check suites and print a PASS/FAIL table.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WalkTag {
    Bn,
    BnAlpha,
    Dn,
    Sn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Param {
    /// n ln n + c n
    #[value(name = "nlogn")]
    NLogN,
    /// (n - 1/2)(ln n + c)
    #[value(name = "half")]
    Half,
}

#[derive(Debug, Clone, Args)]
pub struct WalkArgs {
    #[arg(long, value_enum)]
    pub walk: WalkTag,
    #[arg(long)]
    pub n: usize,
    /// Bias for bn-alpha, in [0, 1]; decimals and p/q are read exactly.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Laziness for sn, in (0, 1).
    #[arg(long)]
    pub a: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ExactArgs {
    /// Print exact quantities as p/q.
    #[arg(long)]
    pub exact_rational: bool,
    /// Use floating point throughout.
    #[arg(long, conflicts_with = "exact_rational")]
    pub float: bool,
    /// Largest denominator in bits before switching to floating point.
    #[arg(long, default_value_t = DEFAULT_BIT_BUDGET)]
    pub bit_budget: u64,
    /// Largest n to enumerate (default 6 for B_n and D_n, 8 for S_n).
    #[arg(long)]
    pub max_n: Option<usize>,
}

impl ExactArgs {
    fn options(&self) -> WalkOptions {
        WalkOptions { bit_budget: self.bit_budget, float: self.float, max_n: self.max_n }
    }
}

/// Failure classes, each with its own exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verify(String),
    Cap(String),
    Io(io::Error),
    Other(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Io(_) | Failure::Other(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Verify(m) | Failure::Cap(m) | Failure::Other(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::Overflow(_) => Failure::Cap(e.to_string()),
            Error::InvalidParameter { name, ref reason } => Failure::Usage(format!("invalid value for --{name}: {reason}")),
            other => Failure::Other(other.to_string()),
        }
    }
}

fn rational_flag(flag: &str, value: &str) -> Result<Rational, Failure> {
    parse_rational(value).map_err(|e| Failure::Usage(format!("invalid value for --{flag}: {e}")))
}

impl WalkArgs {
    pub fn spec(&self) -> Result<WalkSpec, Failure> {
        let unused = |flag: &str, set: &Option<String>| match set {
            Some(_) => Err(Failure::Usage(format!("--{flag} does not apply to --walk {}", self.walk_name()))),
            None => Ok(()),
        };
        let spec = match self.walk {
            WalkTag::Bn => {
                unused("alpha", &self.alpha)?;
                unused("a", &self.a)?;
                WalkSpec::bn(self.n)
            }
            WalkTag::BnAlpha => {
                unused("a", &self.a)?;
                let alpha = self.alpha.as_deref().ok_or_else(|| Failure::Usage("--alpha is required for --walk bn-alpha".into()))?;
                WalkSpec::bn_alpha(self.n, rational_flag("alpha", alpha)?)
            }
            WalkTag::Dn => {
                unused("alpha", &self.alpha)?;
                unused("a", &self.a)?;
                WalkSpec::dn(self.n)
            }
            WalkTag::Sn => {
                unused("alpha", &self.alpha)?;
                let a = self.a.as_deref().ok_or_else(|| Failure::Usage("--a is required for --walk sn".into()))?;
                WalkSpec::sn(self.n, rational_flag("a", a)?)
            }
        };
        Ok(spec?)
    }

    fn walk_name(&self) -> &'static str {
        match self.walk {
            WalkTag::Bn => "bn",
            WalkTag::BnAlpha => "bn-alpha",
            WalkTag::Dn => "dn",
            WalkTag::Sn => "sn",
        }
    }
}

fn sink<'a>(out: &Option<PathBuf>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(stdout),
    })
}

fn describe_out(out: &Option<PathBuf>) -> String {
    out.as_ref().map_or_else(|| "-".to_string(), |p| p.display().to_string())
}

fn first_at_or_below(k: Option<usize>) -> String {
    k.map_or_else(|| "not reached".to_string(), |k| k.to_string())
}

/// Runs one parsed command, writing data to `stdout` and the resolved
/// configuration and diagnostics to `stderr`.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Failure::Usage("invalid value for --threads: must be at least 1".into()));
        }
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let threads = rayon::current_num_threads();
    match &cli.command {
        Command::Spectrum { walk, aggregate: agg, format } => {
            let spec = walk.spec()?;
            writeln!(stderr, "spectrum: {spec} aggregate={agg} format={format:?} threads={threads}")?;
            let (records, total): (Vec<SpectrumRecord>, BigUint) = if *agg {
                let agg = aggregate_spectrum(&spec)?;
                let total = agg.iter().map(|(_, m)| m).sum();
                (agg.iter().map(|(e, m)| SpectrumRecord::new(e, m, None, None)).collect(), total)
            } else {
                let lines = spectrum(&spec)?;
                (lines.iter().map(SpectrumRecord::from_line).collect(), total_multiplicity(&lines))
            };
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Doc<'a> {
                        #[serde(flatten)]
                        summary: SpectrumSummary,
                        records: &'a [SpectrumRecord],
                    }
                    let summary = SpectrumSummary {
                        walk: spec.to_string(),
                        n: spec.n(),
                        lines: records.len(),
                        total_multiplicity: total.to_string(),
                    };
                    serde_json::to_writer(&mut *stdout, &Doc { summary, records: &records })?;
                    writeln!(stdout)?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *stdout);
                    w.write_record(output::SPECTRUM_HEADER)?;
                    for r in &records {
                        let component = r.component.map(|c| c.to_string()).unwrap_or_default();
                        w.write_record([&r.num, &r.den, &output::decimal(r.value), &r.multiplicity, r.diagram.as_deref().unwrap_or(""), &component])?;
                    }
                    w.flush()?;
                    writeln!(stderr, "total multiplicity {total}")?;
                }
            }
        }
        Command::TvCurve { walk, k_max, exact, out } => {
            let spec = walk.spec()?;
            writeln!(
                stderr,
                "tv-curve: {spec} k_max={k_max} float={} exact_rational={} bit_budget={} out={} threads={threads}",
                exact.float,
                exact.exact_rational,
                exact.bit_budget,
                describe_out(out)
            )?;
            let mut walker = Walker::new(&spec, exact.options())?;
            let mut w = csv::Writer::from_writer(sink(out, stdout)?);
            w.write_record(output::TV_HEADER)?;
            loop {
                let d = walker.current();
                let tv = output::number(&d.tv_to_uniform(), exact.exact_rational);
                w.write_record([walker.k().to_string(), tv, output::mode_name(d.mode()).into(), spec.n().to_string(), spec.tag().into()])?;
                if walker.k() >= *k_max {
                    break;
                }
                walker.advance()?;
            }
            w.flush()?;
        }
        Command::BoundsCurve { walk, k_max, with_tv, c, param, exact, out } => {
            let spec = walk.spec()?;
            let n = spec.n();
            let ks: Vec<(Option<f64>, u64)> = match c {
                Some(cs) => cs
                    .iter()
                    .map(|&c| {
                        let t = match param {
                            Param::NLogN => bounds::bn_time(n, c),
                            Param::Half => bounds::dn_time(n, c),
                        };
                        if t.is_finite() && t >= 0.0 {
                            Ok((Some(c), t.ceil() as u64))
                        } else {
                            Err(Failure::Usage(format!("invalid value for --c: {c} gives a negative step count")))
                        }
                    })
                    .collect::<Result<_, _>>()?,
                None => (0..=k_max.unwrap_or(0)).map(|k| (None, k)).collect(),
            };
            writeln!(
                stderr,
                "bounds-curve: {spec} rows={} with_tv={with_tv} param={param:?} exact_rational={} out={} threads={threads}",
                ks.len(),
                exact.exact_rational,
                describe_out(out)
            )?;
            let ds = DsBound::new(&spec)?;
            let threshold = closed_form_threshold(&spec);
            let mut walker = if *with_tv { Some(Walker::new(&spec, exact.options())?) } else { None };
            let mut w = csv::Writer::from_writer(sink(out, stdout)?);
            let mut header: Vec<&str> = output::BOUNDS_HEADER.to_vec();
            if c.is_some() {
                header.insert(0, "c");
            }
            w.write_record(&header)?;
            for (c, k) in ks {
                let raw = bounds::moment_lower_bound_raw(&bounds::moments_exact(n, &spec.projected_laziness(), k)?)?;
                let lower = output::rational(&raw.max(Rational::zero()), exact.exact_rational);
                let tv = match walker.as_mut() {
                    Some(wk) => {
                        let d = wk.advance_to(k as usize)?;
                        output::number(&d.tv_to_uniform(), exact.exact_rational)
                    }
                    None => String::new(),
                };
                let closed = match threshold {
                    Some(t) if k as f64 >= t => output::decimal(closed_form_upper(&spec, k)?),
                    _ => String::new(),
                };
                let mut row = vec![
                    k.to_string(),
                    lower,
                    tv,
                    output::decimal(ds.point(k).value),
                    closed,
                    n.to_string(),
                    spec.tag().to_string(),
                ];
                if let Some(c) = c {
                    row.insert(0, output::decimal(c));
                }
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Command::MixingTime { walk, threshold, k_max, exact } => {
            let spec = walk.spec()?;
            if !(0.0..=1.0).contains(threshold) {
                return Err(Failure::Usage(format!("invalid value for --threshold: {threshold} is not in [0, 1]")));
            }
            writeln!(stderr, "mixing-time: {spec} threshold={threshold} k_max={k_max} float={} threads={threads}", exact.float)?;
            let tv_k = mixing_time(&spec, *threshold, *k_max, exact.options())?;
            let ds = DsBound::new(&spec)?;
            let mut lower_k = None;
            let mut ds_k = None;
            for k in 0..=*k_max {
                if lower_k.is_none() && walk_lower_bound(&spec, k as u64)?.value <= *threshold {
                    lower_k = Some(k);
                }
                if ds_k.is_none() && ds.at(k as u64) <= *threshold {
                    ds_k = Some(k);
                }
            }
            let mut w = csv::Writer::from_writer(&mut *stdout);
            w.write_record(output::MIXING_HEADER)?;
            w.write_record([
                spec.tag().to_string(),
                spec.n().to_string(),
                output::decimal(*threshold),
                first_at_or_below(tv_k),
                first_at_or_below(lower_k),
                first_at_or_below(ds_k),
            ])?;
            w.flush()?;
        }
        Command::Simulate { walk, k, trials, seed, out } => {
            let spec = walk.spec()?;
            writeln!(stderr, "simulate: {spec} k={k:?} trials={trials} seed={seed} rng=ChaCha8(stream=trial) out={} threads={threads}", describe_out(out))?;
            let cfg = SimConfig::new(spec.clone(), 0, *trials, *seed)?;
            let mut w = csv::Writer::from_writer(sink(out, stdout)?);
            w.write_record(output::SIM_HEADER)?;
            for (k, est) in fixed_point_curve(&cfg, k)? {
                w.write_record([
                    k.to_string(),
                    output::decimal(est.mean),
                    output::decimal(est.stderr),
                    trials.to_string(),
                    seed.to_string(),
                    spec.tag().to_string(),
                    spec.n().to_string(),
                ])?;
            }
            w.flush()?;
        }
        Command::Verify { suite, n_max } => {
            writeln!(stderr, "verify: suite={suite} n_max={n_max} threads={threads}")?;
            if *n_max < 2 || *n_max > 7 {
                return Err(Failure::Usage(format!("invalid value for --n-max: {n_max} is not in 2..=7")));
            }
            let reports = verify::run_suite(suite, *n_max).ok_or_else(|| {
                Failure::Usage(format!("invalid value for --suite: {suite} (expected all or one of {})", verify::SUITES.join(", ")))
            })?;
            for r in &reports {
                writeln!(stdout, "{r}")?;
            }
            if let Some(bad) = reports.iter().find(|r| !r.passed()) {
                return Err(Failure::Verify(format!(
                    "suite {} failed: {}",
                    bad.name,
                    bad.first_failure.as_deref().unwrap_or("no checks ran")
                )));
            }
        }
    }
    Ok(())
}
