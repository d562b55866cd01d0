//! Self-checks: every suite compares a formula against an independent
//! computation (brute-force eigenvalues, exact convolution, tableau
//! enumeration, simulation) and records the first counterexample.

use std::fmt;
use std::time::{Duration, Instant};

use hyperwalk_core::bounds::{
    ceil_l_ln_l, closed_form_threshold, closed_form_upper, lemma_ub1_gap, lemma_ub2_gap, moment_lower_bound_raw,
    moments_exact, DsBound,
};
use hyperwalk_core::exact::{GroupDistribution, WalkOptions, Walker};
use hyperwalk_core::montecarlo::{estimate_fixed_point_mean, SimConfig};
use hyperwalk_core::ratio::{self, format_exact, rational, Rational};
use hyperwalk_core::spectrum::{
    aggregate, brute_force_spectrum, bn_alpha_spectrum, bn_spectrum, expand_sorted, spectrum, total_multiplicity,
    trace_power, LineSource,
};
use hyperwalk_core::tableaux::{enumerate_double_diagrams, enumerate_double_tableaux, enumerate_partitions, enumerate_syt};
use hyperwalk_core::{Component, Error, WalkSpec};
use num_bigint::BigUint;
use num_traits::{One, Zero};

pub const SUITES: &[&str] =
    &["oracle", "counting", "traces", "projection", "moments", "sandwich", "lemmas", "biased", "cutoff", "montecarlo"];

#[derive(Debug, Clone)]
pub struct Report {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    pub elapsed: Duration,
    pub notes: Vec<String>,
}

impl Report {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checks: 0,
            failures: 0,
            first_failure: None,
            elapsed: Duration::ZERO,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn error(&mut self, e: Error) {
        self.check(false, || format!("error: {e}"));
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status}  {:<12} {:>6} checks  {:>3} failed  {:>8.2}s",
            self.name,
            self.checks,
            self.failures,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(msg) = &self.first_failure {
            write!(f, "  first counterexample: {msg}")?;
        }
        for note in &self.notes {
            write!(f, "  [{note}]")?;
        }
        Ok(())
    }
}

fn timed(name: &str, body: impl FnOnce(&mut Report) -> Result<(), Error>) -> Report {
    let start = Instant::now();
    let mut r = Report::new(name);
    if let Err(e) = body(&mut r) {
        r.error(e);
    }
    r.elapsed = start.elapsed();
    r
}

fn laziness_values(n: usize) -> Vec<Rational> {
    let n = n as i64;
    let mut v = vec![rational(1, n), rational(1, 2 * n - 1), rational(1, 2), rational(1, 3)];
    v.sort();
    v.dedup();
    v
}

const ALPHAS: [(i64, i64); 5] = [(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)];

/// Every walk with `n ≤ n_max` and group order at most `max_order`.
pub fn small_walks(n_max: usize, max_order: u64) -> Vec<WalkSpec> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let mut candidates = vec![WalkSpec::bn(n).unwrap(), WalkSpec::dn(n).unwrap()];
        candidates.extend(ALPHAS.iter().map(|&(p, q)| WalkSpec::bn_alpha(n, rational(p, q)).unwrap()));
        candidates.extend(laziness_values(n).into_iter().map(|a| WalkSpec::sn(n, a).unwrap()));
        for spec in candidates {
            if spec.group().order().is_ok_and(|o| o <= max_order) {
                out.push(spec);
            }
        }
    }
    out
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Formula spectra against dense eigenvalue solves; also the spectral upper
/// bound computed both ways.
pub fn oracle(n_max: usize, max_order: u64, tol: f64) -> Report {
    timed("oracle", |r| {
        for spec in small_walks(n_max, max_order) {
            let lines = spectrum(&spec)?;
            let formula = expand_sorted(&lines)?;
            let brute = brute_force_spectrum(&spec)?;
            r.check(formula.len() == brute.len(), || format!("{spec}: {} vs {} eigenvalues", formula.len(), brute.len()));
            if formula.len() == brute.len() {
                let d = max_abs_diff(&formula, &brute);
                r.check(d <= tol, || format!("{spec}: max eigenvalue difference {d:e}"));
            }
            let ds = DsBound::new(&spec)?;
            for k in [1u64, 2, 5, 10, 20] {
                let a = ds.at(k);
                let b = hyperwalk_core::bounds::ds_upper_bound_from_eigenvalues(&brute, k);
                r.check((a - b).abs() <= 1e-8, || format!("{spec} k={k}: ds bound {a} vs {b}"));
            }
        }
        Ok(())
    })
}

fn bn_order(n: usize) -> BigUint {
    BigUint::from(2u32).pow(n as u32) * hyperwalk_core::tableaux::factorial(n)
}

/// Multiplicity and dimension sums against group orders.
pub fn counting(n_max: usize) -> Report {
    timed("counting", |r| {
        for n in 2..=n_max {
            let b = bn_order(n);
            let d = &b / 2u32;
            let s = hyperwalk_core::tableaux::factorial(n);
            for (spec, want) in [
                (WalkSpec::bn(n)?, &b),
                (WalkSpec::bn_alpha(n, rational(1, 3))?, &b),
                (WalkSpec::dn(n)?, &d),
                (WalkSpec::sn(n, rational(1, n as i64))?, &s),
            ] {
                let got = total_multiplicity(&spectrum(&spec)?);
                r.check(&got == want, || format!("{spec}: total multiplicity {got}, want {want}"));
            }
            let diagrams = enumerate_double_diagrams(n)?;
            let squares: BigUint = diagrams.iter().map(|m| m.dimension().pow(2)).sum();
            r.check(squares == b, || format!("n={n}: sum of squared dimensions {squares}"));
            // One representative per unordered pair; equal pairs split in two.
            let mut restricted = BigUint::zero();
            for m in &diagrams {
                let dim = m.dimension();
                if m.first == m.second {
                    r.check((&dim % 2u32).is_zero(), || format!("{m}: odd dimension {dim}"));
                    let half = &dim / 2u32;
                    restricted += &half * &half * 2u32;
                } else if m.first > m.second {
                    restricted += &dim * &dim;
                }
            }
            r.check(restricted == d, || format!("n={n}: D_n dimension identity gives {restricted}, want {d}"));
        }
        Ok(())
    })
}

/// `Σ eig·mult = |G| p(1)` and `Σ eig²·mult = |G| (p∗p)(1)`, the right sides
/// read off an exact two-step convolution.
pub fn traces(n_max: usize) -> Report {
    timed("traces", |r| {
        for spec in small_walks(n_max, u64::MAX) {
            let lines = spectrum(&spec)?;
            let order = Rational::from_integer(spec.group().order()?.into());
            let mut w = Walker::new(&spec, WalkOptions { max_n: Some(n_max), ..WalkOptions::default() })?;
            let p1 = exact_prob(w.advance()?, 0);
            let p2 = exact_prob(w.advance()?, 0);
            let t1 = trace_power(&lines, 1);
            let t2 = trace_power(&lines, 2);
            r.check(t1 == &order * &p1, || format!("{spec}: trace {} vs {}", format_exact(&t1), format_exact(&(&order * &p1))));
            r.check(t2 == &order * &p2, || format!("{spec}: trace of square {} vs {}", format_exact(&t2), format_exact(&(&order * &p2))));
        }
        Ok(())
    })
}

fn exact_prob(d: &GroupDistribution, rank: usize) -> Rational {
    d.prob(rank).as_exact().cloned().unwrap_or_else(|| ratio::from_f64(d.prob(rank).to_f64()).unwrap())
}

/// The `|·|` image of the `B_n` and `D_n` walks against the lazy `S_n` walk.
pub fn projection(ns: &[usize], k_max: usize) -> Report {
    timed("projection", |r| {
        for &n in ns {
            for spec in [WalkSpec::bn(n)?, WalkSpec::dn(n)?, WalkSpec::bn_alpha(n, rational(1, 3))?] {
                let target = WalkSpec::sn(n, spec.projected_laziness())?;
                let mut upstairs = Walker::new(&spec, WalkOptions::default())?;
                let mut downstairs = Walker::new(&target, WalkOptions::default())?;
                for k in 1..=k_max {
                    let pushed = upstairs.advance()?.pushforward_projection()?;
                    let gap = pushed.tv_distance(downstairs.advance()?)?;
                    let exact = gap.as_exact().is_some();
                    r.check(exact && gap.to_f64() == 0.0, || format!("{spec} k={k}: pushforward differs from {target} by {gap}"));
                }
            }
        }
        Ok(())
    })
}

/// Closed-form fixed-point moments against exact distributions, both on `S_n`
/// directly and through the pushforward of the `B_n`/`D_n` walks.
pub fn moments(ns: &[usize], k_max: usize) -> Report {
    timed("moments", |r| {
        for &n in ns {
            for a in [rational(1, n as i64), rational(1, 2 * n as i64 - 1), rational(1, 2)] {
                let spec = WalkSpec::sn(n, a.clone())?;
                let mut w = Walker::new(&spec, WalkOptions::default())?;
                for k in 0..=k_max {
                    if k > 0 {
                        w.advance()?;
                    }
                    compare_moments(r, &format!("{spec} k={k}"), w.current(), n, &a, k)?;
                }
            }
            for spec in [WalkSpec::bn(n)?, WalkSpec::dn(n)?] {
                let a = spec.projected_laziness();
                let mut w = Walker::new(&spec, WalkOptions::default())?;
                for k in 1..=k_max.min(6) {
                    w.advance()?;
                    compare_moments(r, &format!("{spec} k={k}"), &w.current().pushforward_projection()?, n, &a, k)?;
                }
            }
        }
        Ok(())
    })
}

fn compare_moments(r: &mut Report, label: &str, d: &GroupDistribution, n: usize, a: &Rational, k: usize) -> Result<(), Error> {
    let (e1, e2) = d.fixed_point_moments()?;
    let m = moments_exact(n, a, k as u64)?;
    r.check(e1.as_exact() == Some(&m.e1), || format!("{label}: E[f] {e1} vs {}", format_exact(&m.e1)));
    r.check(e2.as_exact() == Some(&m.e2), || format!("{label}: E[f^2] {e2} vs {}", format_exact(&m.e2)));
    Ok(())
}

/// `lower ≤ TV ≤ ds ≤ closed form` along exact curves. The first two
/// comparisons are exact: `TV ≤ ½√S` is checked as `4 TV² ≤ S`.
pub fn sandwich(ns: &[usize], k_max: usize) -> Report {
    timed("sandwich", |r| {
        let mut ds_closed_checks = 0u64;
        for &n in ns {
            let specs = [
                WalkSpec::bn(n)?,
                WalkSpec::dn(n)?,
                WalkSpec::bn_alpha(n, rational(1, 4))?,
                WalkSpec::sn(n, rational(1, n as i64))?,
                WalkSpec::sn(n, rational(1, 2))?,
            ];
            for spec in specs {
                let ds = DsBound::new(&spec)?;
                let a = spec.projected_laziness();
                let threshold = closed_form_threshold(&spec);
                let mut w = Walker::new(&spec, WalkOptions::default())?;
                for k in 0..=k_max {
                    if k > 0 {
                        w.advance()?;
                    }
                    let tv = w.current().tv_to_uniform();
                    let tv = tv.as_exact().cloned().ok_or(Error::Overflow("exact total variation"))?;
                    let lower = moment_lower_bound_raw(&moments_exact(n, &a, k as u64)?)?;
                    r.check(lower <= tv, || {
                        format!("{spec} k={k}: lower {} above TV {}", ratio::to_f64(&lower), ratio::to_f64(&tv))
                    });
                    let s = ds.sum_exact(k as u64);
                    r.check(rational(4, 1) * &tv * &tv <= s, || {
                        format!("{spec} k={k}: TV {} above ds bound {}", ratio::to_f64(&tv), ds.at(k as u64))
                    });
                    if let Some(t) = threshold {
                        if (k as f64) >= t.ceil() {
                            let closed = closed_form_upper(&spec, k as u64)?;
                            r.check(ratio::to_f64(&tv) <= closed, || format!("{spec} k={k}: TV above closed form {closed}"));
                            r.check(ds.at(k as u64).min(1.0) <= closed, || {
                                format!("{spec} k={k}: ds bound {} above closed form {closed}", ds.at(k as u64))
                            });
                            ds_closed_checks += 1;
                        }
                    }
                }
            }
        }
        r.notes.push(format!("{ds_closed_checks} closed-form rows"));
        Ok(())
    })
}

/// The corner inequality with its left side recomputed from explicit
/// tableaux, and the partition inequality with `d_λ` counted by enumeration.
pub fn lemmas(n_max: usize, l_max: usize) -> Report {
    timed("lemmas", |r| {
        for n in 1..=n_max {
            for mu in enumerate_double_diagrams(n)? {
                let m = mu.first.size();
                if m == 0 || 2 * m > n {
                    r.check(lemma_ub1_gap(&mu, 1, 0).is_err(), || format!("{mu}: precondition not enforced"));
                    continue;
                }
                let tableaux = enumerate_double_tableaux(&mu)?;
                for k in [1u64, 5, 10] {
                    for x in [0i64, 1] {
                        let (lhs, rhs) = lemma_ub1_gap(&mu, k, x)?;
                        r.check(lhs < rhs, || format!("{mu} k={k} x={x}: {} >= {}", ratio::to_f64(&lhs), ratio::to_f64(&rhs)));
                        let mut brute = Rational::zero();
                        for t in &tableaux {
                            let c = t.content_of_entry(n)?.0;
                            brute += ratio::pow(&rational(c + x, n as i64), 2 * k);
                        }
                        r.check(brute == lhs, || format!("{mu} k={k} x={x}: tableau sum disagrees"));
                    }
                }
            }
        }
        for l in 1..=l_max {
            let kl = ceil_l_ln_l(l);
            for k in [1, kl, 40] {
                let gap = lemma_ub2_gap(l, k)?;
                r.check(gap.holds(), || format!("l={l} k={k}: {} >= {}", ratio::to_f64(&gap.lhs), gap.rhs));
                let mut brute = Rational::zero();
                for p in enumerate_partitions(l)? {
                    let d = enumerate_syt(&p)?.len() as i64;
                    brute += rational(d * d, 1) * ratio::pow(&rational(p.largest_part() as i64, l as i64), 2 * k);
                }
                r.check(brute == gap.lhs, || format!("l={l} k={k}: tableau count disagrees"));
            }
            let at = lemma_ub2_gap(l, kl)?;
            r.check(ratio::to_f64(&at.lhs) < std::f64::consts::E, || format!("l={l}: sum at k={kl} is not below e"));
        }
        Ok(())
    })
}

/// `α = 1` is the unbiased walk, `α = ½` kills the second component, and the
/// biased spectra match dense solves.
pub fn biased(n_max: usize, oracle_n: usize, tol: f64) -> Report {
    timed("biased", |r| {
        for n in 2..=n_max {
            let one = aggregate(&bn_alpha_spectrum(n, &Rational::one())?);
            let plain = aggregate(&bn_spectrum(n)?);
            r.check(one == plain, || format!("n={n}: alpha=1 differs from the unbiased spectrum"));
            for line in bn_alpha_spectrum(n, &rational(1, 2))? {
                if let LineSource::Diagram { component: Component::Second, diagram } = &line.source {
                    r.check(line.eigenvalue.is_zero(), || {
                        format!("n={n} {diagram}: second-component eigenvalue {}", format_exact(&line.eigenvalue))
                    });
                }
            }
        }
        for (p, q) in [(0, 1), (1, 4), (3, 4)] {
            let spec = WalkSpec::bn_alpha(oracle_n, rational(p, q))?;
            let d = max_abs_diff(&expand_sorted(&spectrum(&spec)?)?, &brute_force_spectrum(&spec)?);
            r.check(d <= tol, || format!("{spec}: max eigenvalue difference {d:e}"));
        }
        Ok(())
    })
}

/// Steps at which each curve first reaches a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossings {
    pub lower: Option<usize>,
    pub tv: Option<usize>,
    pub ds: Option<usize>,
}

/// Floating-point curve on `B_n`: monotone, and its crossing of `threshold`
/// sits between the lower- and upper-bound crossings.
pub fn cutoff(n: usize, threshold: f64, k_max: usize) -> (Report, Crossings) {
    let mut crossings = Crossings { lower: None, tv: None, ds: None };
    let report = timed("cutoff", |r| {
        let spec = WalkSpec::bn(n)?;
        let ds = DsBound::new(&spec)?;
        let a = spec.projected_laziness();
        let mut w = Walker::new(&spec, WalkOptions { max_n: Some(n), ..WalkOptions::float() })?;
        let mut prev = f64::INFINITY;
        for k in 0..=k_max {
            if k > 0 {
                w.advance()?;
            }
            let tv = w.current().tv_to_uniform().to_f64();
            r.check(tv <= prev, || format!("k={k}: TV rose from {prev} to {tv}"));
            prev = tv;
            let lower = ratio::to_f64(&moment_lower_bound_raw(&moments_exact(n, &a, k as u64)?)?);
            if crossings.lower.is_none() && lower <= threshold {
                crossings.lower = Some(k);
            }
            if crossings.tv.is_none() && tv <= threshold {
                crossings.tv = Some(k);
            }
            if crossings.ds.is_none() && ds.at(k as u64) <= threshold {
                crossings.ds = Some(k);
            }
            if crossings.ds.is_some() && crossings.tv.is_some() {
                break;
            }
        }
        let c = crossings;
        r.check(
            matches!((c.lower, c.tv, c.ds), (Some(l), Some(t), Some(d)) if l <= t && t <= d),
            || format!("crossings lower={:?} tv={:?} ds={:?}", c.lower, c.tv, c.ds),
        );
        r.notes.push(format!("k: lower {:?}, tv {:?}, ds {:?}", c.lower, c.tv, c.ds));
        Ok(())
    });
    (report, crossings)
}

/// Simulated fixed-point mean against the exact first moment.
pub fn montecarlo(n: usize, k: usize, trials: u64, seed: u64, sigmas: f64) -> Report {
    timed("montecarlo", |r| {
        let spec = WalkSpec::bn(n)?;
        let est = estimate_fixed_point_mean(&SimConfig::new(spec.clone(), k, trials, seed)?)?;
        let e1 = ratio::to_f64(&moments_exact(n, &spec.projected_laziness(), k as u64)?.e1);
        let z = (est.mean - e1).abs() / est.stderr;
        r.check(est.stderr.is_finite() && est.stderr.is_sign_positive() && z <= sigmas, || {
            format!("mean {} stderr {} exact {e1}: {z:.2} standard errors", est.mean, est.stderr)
        });
        r.notes.push(format!("mean {:.5} exact {:.5} z {:.2}", est.mean, e1, z));
        Ok(())
    })
}

/// A suite by name at a size the CLI can run in seconds.
pub fn run_suite(name: &str, n_max: usize) -> Option<Vec<Report>> {
    let ns: Vec<usize> = (3..=n_max.min(5)).collect();
    Some(match name {
        "oracle" => vec![oracle(n_max, 1000, 1e-9)],
        "counting" => vec![counting(n_max)],
        "traces" => vec![traces(n_max.min(5))],
        "projection" => vec![projection(&ns, 12)],
        "moments" => vec![moments(&ns, 10)],
        "sandwich" => vec![sandwich(&ns, 60)],
        "lemmas" => vec![lemmas(n_max, n_max.max(10))],
        "biased" => vec![biased(n_max, 3, 1e-9)],
        "cutoff" => vec![cutoff(n_max.min(6), 0.25, 400).0],
        "montecarlo" => vec![montecarlo(20, 59, 100_000, 20240601, 3.0)],
        "all" => SUITES.iter().flat_map(|s| run_suite(s, n_max).unwrap()).collect(),
        _ => return None,
    })
}
