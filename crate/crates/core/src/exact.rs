//! Exact k-step distributions by sparse convolution, total variation to
//! uniform, projection to `S_n`, and fixed-point moments.
//!
//! A distribution is a dense vector indexed by group rank. In exact mode it is
//! a vector of integer numerators over one shared denominator, which is the
//! step measure's common denominator raised to the number of steps taken; when
//! that denominator would exceed the bit budget the walk drops to `f64`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{default_enumeration_cap, enumerate_group_with_cap, Family, GroupId};
use crate::ratio::{self, Number, Rational};
use crate::walk::{StepMeasure, WalkSpec};

pub const DEFAULT_BIT_BUDGET: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    Exact { numerators: Vec<BigUint>, denominator: BigUint },
    Float(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupDistribution {
    group: GroupId,
    values: Values,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkOptions {
    /// Largest allowed denominator size in bits before falling back to `f64`.
    pub bit_budget: u64,
    /// Start in floating mode.
    pub float: bool,
    /// Largest `n` to enumerate; defaults to the per-family enumeration cap.
    pub max_n: Option<usize>,
}

impl Default for WalkOptions {
    fn default() -> Self {
        Self { bit_budget: DEFAULT_BIT_BUDGET, float: false, max_n: None }
    }
}

impl WalkOptions {
    pub fn float() -> Self {
        Self { float: true, ..Self::default() }
    }

    fn cap_for(&self, family: Family) -> usize {
        self.max_n.unwrap_or_else(|| default_enumeration_cap(family))
    }
}

fn unreduced_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    Ratio::new_raw(BigInt::from(num.clone()), BigInt::from(den.clone())).to_f64().unwrap_or(0.0)
}

impl GroupDistribution {
    /// Point mass at the identity (rank 0).
    pub fn delta_at_identity(group: GroupId) -> Result<Self> {
        let size = group.order()? as usize;
        let mut numerators = vec![BigUint::zero(); size];
        numerators[0] = BigUint::one();
        Ok(Self { group, values: Values::Exact { numerators, denominator: BigUint::one() } })
    }

    pub fn uniform(group: GroupId) -> Result<Self> {
        let size = group.order()?;
        Ok(Self {
            group,
            values: Values::Exact { numerators: vec![BigUint::one(); size as usize], denominator: BigUint::from(size) },
        })
    }

    pub fn from_exact(group: GroupId, numerators: Vec<BigUint>, denominator: BigUint) -> Result<Self> {
        Self::check_len(group, numerators.len())?;
        Ok(Self { group, values: Values::Exact { numerators, denominator } })
    }

    pub fn from_float(group: GroupId, values: Vec<f64>) -> Result<Self> {
        Self::check_len(group, values.len())?;
        Ok(Self { group, values: Values::Float(values) })
    }

    fn check_len(group: GroupId, len: usize) -> Result<()> {
        if group.order()? as usize != len {
            return Err(Error::InvalidParameter {
                name: "values",
                reason: alloc::format!("{len} values for a group of order {}", group.order()?),
            });
        }
        Ok(())
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn values(&self) -> &Values {
        &self.values
    }

    pub fn len(&self) -> usize {
        match &self.values {
            Values::Exact { numerators, .. } => numerators.len(),
            Values::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mode(&self) -> Mode {
        match self.values {
            Values::Exact { .. } => Mode::Exact,
            Values::Float(_) => Mode::Float,
        }
    }

    /// Probability at a rank.
    pub fn prob(&self, rank: usize) -> Number {
        match &self.values {
            Values::Exact { numerators, denominator } => Number::Exact(Rational::new(
                BigInt::from(numerators[rank].clone()),
                BigInt::from(denominator.clone()),
            )),
            Values::Float(v) => Number::Float(v[rank]),
        }
    }

    pub fn total_mass(&self) -> Number {
        match &self.values {
            Values::Exact { numerators, denominator } => Number::Exact(Rational::new(
                BigInt::from(numerators.iter().sum::<BigUint>()),
                BigInt::from(denominator.clone()),
            )),
            Values::Float(v) => Number::Float(crate::montecarlo::pairwise_sum(v)),
        }
    }

    pub fn to_float(&self) -> Self {
        match &self.values {
            Values::Exact { numerators, denominator } => Self {
                group: self.group,
                values: Values::Float(numerators.iter().map(|x| unreduced_to_f64(x, denominator)).collect()),
            },
            Values::Float(_) => self.clone(),
        }
    }

    pub fn as_f64(&self) -> Vec<f64> {
        match self.to_float().values {
            Values::Float(v) => v,
            Values::Exact { .. } => unreachable!(),
        }
    }

    /// `½ Σ_x |d(x) - 1/|G||`.
    pub fn tv_to_uniform(&self) -> Number {
        let size = self.len();
        match &self.values {
            Values::Exact { numerators, denominator } => {
                let g = BigUint::from(size);
                let sum: BigUint = numerators
                    .iter()
                    .map(|x| {
                        let scaled = x * &g;
                        if &scaled >= denominator {
                            scaled - denominator
                        } else {
                            denominator - scaled
                        }
                    })
                    .sum();
                Number::Exact(Rational::new(BigInt::from(sum), BigInt::from(denominator * g * 2u32)))
            }
            Values::Float(v) => {
                let u = 1.0 / size as f64;
                let diffs: Vec<f64> = v.iter().map(|x| (x - u).abs()).collect();
                Number::Float(0.5 * crate::montecarlo::pairwise_sum(&diffs))
            }
        }
    }

    /// Exact total variation between two exact distributions on the same group.
    pub fn tv_distance(&self, other: &Self) -> Result<Number> {
        if self.group != other.group {
            return Err(Error::GroupMismatch { left: self.group.name(), right: other.group.name() });
        }
        match (&self.values, &other.values) {
            (
                Values::Exact { numerators: a, denominator: da },
                Values::Exact { numerators: b, denominator: db },
            ) => {
                let sum: BigUint = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| {
                        let (l, r) = (x * db, y * da);
                        if l >= r {
                            l - r
                        } else {
                            r - l
                        }
                    })
                    .sum();
                Ok(Number::Exact(Rational::new(BigInt::from(sum), BigInt::from(da * db * 2u32))))
            }
            _ => {
                let (a, b) = (self.as_f64(), other.as_f64());
                let diffs: Vec<f64> = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).collect();
                Ok(Number::Float(0.5 * crate::montecarlo::pairwise_sum(&diffs)))
            }
        }
    }

    /// Pushforward under `π ↦ |π|` from `B_n` or `D_n` to `S_n`.
    pub fn pushforward_projection(&self) -> Result<Self> {
        if self.group.family == Family::S {
            return Err(Error::InvalidParameter { name: "group", reason: "pushforward needs a B_n or D_n distribution".into() });
        }
        let target = GroupId::s(self.group.n);
        let size = target.order()? as usize;
        let map: Vec<usize> = enumerate_group_with_cap(self.group, usize::MAX)?
            .map(|p| target.rank(&p.project().to_signed()).map(|r| r as usize))
            .collect::<Result<_>>()?;
        let values = match &self.values {
            Values::Exact { numerators, denominator } => {
                let mut out = vec![BigUint::zero(); size];
                for (x, v) in numerators.iter().enumerate() {
                    out[map[x]] += v;
                }
                Values::Exact { numerators: out, denominator: denominator.clone() }
            }
            Values::Float(v) => {
                let mut out = vec![0.0; size];
                for (x, p) in v.iter().enumerate() {
                    out[map[x]] += p;
                }
                Values::Float(out)
            }
        };
        Ok(Self { group: target, values })
    }

    /// `(E[f], E[f²])` of the fixed-point count `f` under a distribution on `S_n`.
    pub fn fixed_point_moments(&self) -> Result<(Number, Number)> {
        if self.group.family != Family::S {
            return Err(Error::InvalidParameter { name: "group", reason: "fixed points need an S_n distribution".into() });
        }
        let fixed: Vec<u64> = enumerate_group_with_cap(self.group, usize::MAX)?
            .map(|p| p.projected_fixed_points() as u64)
            .collect();
        Ok(match &self.values {
            Values::Exact { numerators, denominator } => {
                let mut e1 = BigUint::zero();
                let mut e2 = BigUint::zero();
                for (v, &f) in numerators.iter().zip(&fixed) {
                    e1 += v * f;
                    e2 += v * (f * f);
                }
                let den = BigInt::from(denominator.clone());
                (
                    Number::Exact(Rational::new(BigInt::from(e1), den.clone())),
                    Number::Exact(Rational::new(BigInt::from(e2), den)),
                )
            }
            Values::Float(v) => {
                let t1: Vec<f64> = v.iter().zip(&fixed).map(|(p, &f)| p * f as f64).collect();
                let t2: Vec<f64> = v.iter().zip(&fixed).map(|(p, &f)| p * (f * f) as f64).collect();
                (
                    Number::Float(crate::montecarlo::pairwise_sum(&t1)),
                    Number::Float(crate::montecarlo::pairwise_sum(&t2)),
                )
            }
        })
    }

    /// True when `d(x) = d(x⁻¹)` for every `x`.
    pub fn is_inverse_symmetric(&self) -> Result<bool> {
        for (i, x) in enumerate_group_with_cap(self.group, usize::MAX)?.enumerate() {
            let j = self.group.rank(&x.inverse())? as usize;
            if self.prob(i) != self.prob(j) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A step measure compiled against a ranked group: for each support element
/// `s`, the table `x ↦ rank(x s⁻¹)`.
pub struct Kernel {
    group: GroupId,
    tables: Vec<Vec<u32>>,
    weight_den: BigUint,
    weights_int: Vec<BigUint>,
    weights_f64: Vec<f64>,
}

impl Kernel {
    pub fn new(measure: &StepMeasure, max_n: usize) -> Result<Self> {
        let group = measure.group();
        let elements: Vec<_> = enumerate_group_with_cap(group, max_n)?.collect();
        let mut tables = Vec::with_capacity(measure.len());
        for (s, _) in measure.support() {
            let s_inv = s.inverse();
            let table = elements
                .iter()
                .map(|x| group.rank(&x.compose_unchecked(&s_inv)).map(|r| r as u32))
                .collect::<Result<Vec<_>>>()?;
            tables.push(table);
        }
        let (lcd, weights) = measure.integer_weights();
        let weights_int = weights
            .iter()
            .map(|w| w.to_biguint().ok_or(Error::InvalidParameter { name: "weight", reason: "negative".into() }))
            .collect::<Result<Vec<_>>>()?;
        let weights_f64 = measure.support().iter().map(|(_, w)| ratio::to_f64(w)).collect();
        Ok(Self {
            group,
            tables,
            weight_den: lcd.to_biguint().expect("positive denominator"),
            weights_int,
            weights_f64,
        })
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    /// `out(x) = Σ_s d(x s⁻¹) m(s)`.
    pub fn step(&self, d: &GroupDistribution, bit_budget: u64) -> Result<GroupDistribution> {
        if d.group != self.group {
            return Err(Error::GroupMismatch { left: d.group.name(), right: self.group.name() });
        }
        let values = match &d.values {
            Values::Exact { numerators, denominator } => {
                let next_den = denominator * &self.weight_den;
                if next_den.bits() > bit_budget {
                    return self.step(&d.to_float(), bit_budget);
                }
                let mut out = vec![BigUint::zero(); numerators.len()];
                fill(&mut out, |x| {
                    let mut acc = BigUint::zero();
                    for (table, w) in self.tables.iter().zip(&self.weights_int) {
                        let v = &numerators[table[x] as usize];
                        if !v.is_zero() {
                            acc += v * w;
                        }
                    }
                    acc
                });
                Values::Exact { numerators: out, denominator: next_den }
            }
            Values::Float(v) => {
                let mut out = vec![0.0; v.len()];
                fill(&mut out, |x| {
                    self.tables.iter().zip(&self.weights_f64).map(|(t, w)| v[t[x] as usize] * w).sum()
                });
                Values::Float(out)
            }
        };
        Ok(GroupDistribution { group: self.group, values })
    }
}

#[cfg(feature = "parallel")]
fn fill<T: Send, F: Fn(usize) -> T + Sync>(out: &mut [T], f: F) {
    use rayon::prelude::*;
    out.par_iter_mut().enumerate().for_each(|(x, o)| *o = f(x));
}

#[cfg(not(feature = "parallel"))]
fn fill<T, F: Fn(usize) -> T>(out: &mut [T], f: F) {
    for (x, o) in out.iter_mut().enumerate() {
        *o = f(x);
    }
}

/// One convolution step with a freshly compiled kernel.
pub fn convolve_step(d: &GroupDistribution, m: &StepMeasure) -> Result<GroupDistribution> {
    if d.group != m.group() {
        return Err(Error::GroupMismatch { left: d.group.name(), right: m.group().name() });
    }
    Kernel::new(m, usize::MAX)?.step(d, DEFAULT_BIT_BUDGET)
}

/// Iterates `p^{*k}` for `k = 0, 1, 2, …`, starting at the identity.
pub struct Walker {
    kernel: Kernel,
    current: GroupDistribution,
    k: usize,
    bit_budget: u64,
}

impl Walker {
    pub fn new(spec: &WalkSpec, options: WalkOptions) -> Result<Self> {
        Self::from_measure(&spec.step_measure(), options)
    }

    pub fn from_measure(measure: &StepMeasure, options: WalkOptions) -> Result<Self> {
        let group = measure.group();
        let kernel = Kernel::new(measure, options.cap_for(group.family))?;
        let mut current = GroupDistribution::delta_at_identity(group)?;
        if options.float {
            current = current.to_float();
        }
        Ok(Self { kernel, current, k: 0, bit_budget: options.bit_budget })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn current(&self) -> &GroupDistribution {
        &self.current
    }

    pub fn advance(&mut self) -> Result<&GroupDistribution> {
        self.current = self.kernel.step(&self.current, self.bit_budget)?;
        self.k += 1;
        Ok(&self.current)
    }

    pub fn advance_to(&mut self, k: usize) -> Result<&GroupDistribution> {
        while self.k < k {
            self.advance()?;
        }
        Ok(&self.current)
    }
}

pub fn distribution_after(spec: &WalkSpec, k: usize, options: WalkOptions) -> Result<GroupDistribution> {
    let mut w = Walker::new(spec, options)?;
    w.advance_to(k)?;
    Ok(w.current)
}

/// One row of a total-variation curve.
#[derive(Debug, Clone, PartialEq)]
pub struct TvPoint {
    pub k: usize,
    pub tv: Number,
    pub mode: Mode,
}

pub fn tv_curve(spec: &WalkSpec, k_max: usize, options: WalkOptions) -> Result<Vec<TvPoint>> {
    let mut w = Walker::new(spec, options)?;
    let mut out = Vec::with_capacity(k_max + 1);
    loop {
        let d = w.current();
        out.push(TvPoint { k: w.k(), tv: d.tv_to_uniform(), mode: d.mode() });
        if w.k() >= k_max {
            break;
        }
        w.advance()?;
    }
    Ok(out)
}

/// Smallest `k ≤ k_max` with `TV(p^{*k}, U) ≤ threshold`, or `None`.
pub fn mixing_time(spec: &WalkSpec, threshold: f64, k_max: usize, options: WalkOptions) -> Result<Option<usize>> {
    let mut w = Walker::new(spec, options)?;
    loop {
        if w.current().tv_to_uniform().le_f64(threshold) {
            return Ok(Some(w.k()));
        }
        if w.k() >= k_max {
            return Ok(None);
        }
        w.advance()?;
    }
}
