//! Upper bounds from the spectrum, closed-form upper bounds, the
//! fixed-point moment lower bound, and the two auxiliary inequalities behind
//! the closed form.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratio::{self, Rational};
use crate::spectrum;
use crate::tableaux::{binomial, enumerate_partitions, DoubleDiagram};
use crate::walk::{WalkKind, WalkSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    UpperDsExact,
    UpperClosedForm,
    LowerMoment,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundPoint {
    pub k: u64,
    /// In `[0, 1]`.
    pub value: f64,
    pub kind: BoundKind,
    /// The raw formula value left `[0, 1]`.
    pub clamped: bool,
}

impl BoundPoint {
    pub fn new(k: u64, raw: f64, kind: BoundKind) -> Self {
        let value = raw.clamp(0.0, 1.0);
        Self { k, value, kind, clamped: value != raw }
    }
}

/// Exact `(E[f], E[f²])` for the fixed-point count under `𝒫_a^{*k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentPair {
    pub e1: Rational,
    pub e2: Rational,
}

/// Precomputed aggregate spectrum for evaluating `½ √(Σ_{ρ≠1} d_ρ tr(ρ̂^{2k}))`
/// at many `k`.
#[derive(Debug, Clone)]
pub struct DsBound {
    lines: Vec<(Rational, BigUint)>,
    /// Same lines as floats, with one copy of the trivial eigenvalue removed.
    nontrivial: Vec<(f64, f64)>,
}

impl DsBound {
    pub fn new(spec: &WalkSpec) -> Result<Self> {
        let lines = spectrum::aggregate_spectrum(spec)?;
        let mut nontrivial = Vec::with_capacity(lines.len());
        let mut removed = false;
        for (e, m) in &lines {
            let mut m = m.clone();
            if !removed && e.is_one() {
                m -= 1u32;
                removed = true;
            }
            if !m.is_zero() {
                nontrivial.push((ratio::to_f64(e), ratio::to_f64(&ratio::from_uint(&m))));
            }
        }
        if !removed {
            return Err(Error::InvalidParameter { name: "spectrum", reason: "no trivial eigenvalue".into() });
        }
        Ok(Self { lines, nontrivial })
    }

    /// `Σ mult · eig^{2k} − 1`, exactly.
    pub fn sum_exact(&self, k: u64) -> Rational {
        let total: Rational =
            self.lines.iter().map(|(e, m)| ratio::pow(e, 2 * k) * ratio::from_uint(m)).sum();
        total - Rational::one()
    }

    /// The same sum in floating point; every term is non-negative.
    pub fn sum_f64(&self, k: u64) -> f64 {
        let exp = 2.0 * k as f64;
        let terms: Vec<f64> = self
            .nontrivial
            .iter()
            .map(|&(e, m)| if k == 0 { m } else { m * libm::pow(e.abs(), exp) })
            .collect();
        crate::montecarlo::pairwise_sum(&terms)
    }

    /// Unclamped bound `½ √(sum)`.
    pub fn at(&self, k: u64) -> f64 {
        0.5 * libm::sqrt(self.sum_f64(k))
    }

    pub fn point(&self, k: u64) -> BoundPoint {
        BoundPoint::new(k, self.at(k), BoundKind::UpperDsExact)
    }
}

pub fn ds_upper_bound(spec: &WalkSpec, k: u64) -> Result<f64> {
    Ok(DsBound::new(spec)?.at(k))
}

/// `½ √(Σ mult · eig^{2k} − 1)` directly from a list of numeric eigenvalues.
/// The `− 1` is taken by dropping the eigenvalue closest to 1 rather than by
/// subtraction, which would cancel catastrophically at large `k`.
pub fn ds_upper_bound_from_eigenvalues(eigenvalues: &[f64], k: u64) -> f64 {
    let trivial = eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - 1.0).abs().total_cmp(&(b.1 - 1.0).abs()))
        .map(|(i, _)| i);
    let terms: Vec<f64> = eigenvalues
        .iter()
        .enumerate()
        .filter(|&(i, _)| Some(i) != trivial)
        .map(|(_, e)| libm::pow(e.abs(), 2.0 * k as f64))
        .collect();
    0.5 * libm::sqrt(crate::montecarlo::pairwise_sum(&terms))
}

/// `n ln n`.
pub fn bn_threshold(n: usize) -> f64 {
    n as f64 * libm::log(n as f64)
}

/// `(n − ½) ln n`.
pub fn dn_threshold(n: usize) -> f64 {
    (n as f64 - 0.5) * libm::log(n as f64)
}

/// `n ln n + c n`.
pub fn bn_time(n: usize, c: f64) -> f64 {
    bn_threshold(n) + c * n as f64
}

/// `(n − ½)(ln n + c)`.
pub fn dn_time(n: usize, c: f64) -> f64 {
    (n as f64 - 0.5) * (libm::log(n as f64) + c)
}

fn check_domain(k: u64, threshold: f64) -> Result<()> {
    if (k as f64) < threshold {
        Err(Error::Domain { k, threshold })
    } else {
        Ok(())
    }
}

/// `½ √(2e^{−2k/n} + (4+4e)(e^{n² e^{−2k/n}} − 1) + e^{−4k/n})`, clamped to 1,
/// for `k ≥ n ln n`.
pub fn closed_form_upper_bn(n: usize, k: u64) -> Result<f64> {
    check_domain(k, bn_threshold(n))?;
    let (nf, kf) = (n as f64, k as f64);
    let e = core::f64::consts::E;
    let q = libm::exp(-2.0 * kf / nf);
    let rhs = 2.0 * q + (4.0 + 4.0 * e) * libm::expm1(nf * nf * q) + q * q;
    Ok((0.5 * libm::sqrt(rhs)).min(1.0))
}

/// `½ √(2(1+e)(e^{n² e^{−4k/(2n−1)}} − 1) + e^{−4k/(2n−1)})`, clamped to 1,
/// for `k ≥ (n − ½) ln n`.
pub fn closed_form_upper_dn(n: usize, k: u64) -> Result<f64> {
    check_domain(k, dn_threshold(n))?;
    let (nf, kf) = (n as f64, k as f64);
    let e = core::f64::consts::E;
    let q = libm::exp(-4.0 * kf / (2.0 * nf - 1.0));
    let rhs = 2.0 * (1.0 + e) * libm::expm1(nf * nf * q) + q;
    Ok((0.5 * libm::sqrt(rhs)).min(1.0))
}

/// The closed form matching a walk; the biased walk shares the unbiased one.
/// `S_n` walks have none.
pub fn closed_form_upper(spec: &WalkSpec, k: u64) -> Result<f64> {
    match spec.kind() {
        WalkKind::FlipTransposeTopB | WalkKind::BiasedFlipTransposeTopB { .. } => closed_form_upper_bn(spec.n(), k),
        WalkKind::FlipTransposeTopD => closed_form_upper_dn(spec.n(), k),
        WalkKind::TransposeTopS { .. } => Err(Error::InvalidParameter {
            name: "walk",
            reason: "no closed-form upper bound for the S_n walk".into(),
        }),
    }
}

pub fn closed_form_threshold(spec: &WalkSpec) -> Option<f64> {
    match spec.kind() {
        WalkKind::FlipTransposeTopB | WalkKind::BiasedFlipTransposeTopB { .. } => Some(bn_threshold(spec.n())),
        WalkKind::FlipTransposeTopD => Some(dn_threshold(spec.n())),
        WalkKind::TransposeTopS { .. } => None,
    }
}

/// Exact fixed-point moments of `𝒫_a^{*k}` on `S_n`, summed from the
/// eigenvalues of the representations `(n)`, `(n−1,1)`, `(n−2,2)` and
/// `(n−2,1,1)`. Valid for every `n ≥ 2`: at `n = 2, 3` the terms belonging to
/// missing partitions carry zero or cancelling coefficients.
pub fn moments_exact(n: usize, a: &Rational, k: u64) -> Result<MomentPair> {
    if n < 2 {
        return Err(Error::InvalidParameter { name: "n", reason: alloc::format!("moments need n >= 2, got {n}") });
    }
    let r = |num: i64, den: i64| ratio::rational(num, den);
    let ni = n as i64;
    let nr = Rational::from_integer(BigInt::from(ni));
    let nm1 = Rational::from_integer(BigInt::from(ni - 1));
    let p = |x: Rational| ratio::pow(&x, k);

    let e_std = p((&nr + a - r(2, 1)) / &nm1);
    let e_sgn = p((a * &nr - r(1, 1)) / &nm1);
    let e_two = p((&nr + a * r(2, 1) - r(3, 1)) / &nm1);
    let e_a = p(a.clone());
    let e_hook = p((a * &nr + a - r(2, 1)) / &nm1);

    let c = |x: i64| Rational::from_integer(BigInt::from(x));
    let standard = c(ni - 2) * &e_std + &e_sgn;
    let e1 = c(1) + &standard;
    let e2 = c(2)
        + c(3) * &standard
        + (r((ni - 1) * (ni - 4), 2) * &e_two + c(ni - 2) * &e_a)
        + (r((ni - 2) * (ni - 3), 2) * &e_two + c(ni - 2) * &e_hook);
    Ok(MomentPair { e1, e2 })
}

/// `1 − 4(E₂ − E₁²)/E₁² − 2/E₁`, exactly.
pub fn moment_lower_bound_raw(moments: &MomentPair) -> Result<Rational> {
    let MomentPair { e1, e2 } = moments;
    if !e1.is_positive() {
        return Err(Error::InvalidParameter { name: "E1", reason: "first moment must be positive".into() });
    }
    let sq = e1 * e1;
    Ok(Rational::one() - ratio::rational(4, 1) * (e2 - &sq) / &sq - ratio::rational(2, 1) / e1)
}

/// Chebyshev/Markov lower bound on `TV(𝒫_a^{*k}, U)`, clamped to `[0, 1]`.
pub fn moment_lower_bound(n: usize, a: &Rational, k: u64) -> Result<BoundPoint> {
    let raw = moment_lower_bound_raw(&moments_exact(n, a, k)?)?;
    let mut point = BoundPoint::new(k, ratio::to_f64(&raw), BoundKind::LowerMoment);
    if raw.is_negative() {
        point.value = 0.0;
        point.clamped = true;
    }
    Ok(point)
}

/// The moment lower bound for a walk, using the `S_n` walk it projects onto.
pub fn walk_lower_bound(spec: &WalkSpec, k: u64) -> Result<BoundPoint> {
    moment_lower_bound(spec.n(), &spec.projected_laziness(), k)
}

/// Both sides of the corner inequality for a double diagram `μ` with
/// `1 ≤ |μ1| ≤ n/2`:
/// `Σ_T ((c(b_T(n)) + x)/n)^{2k}` against
/// `C(n,m) d_{μ2} d_{μ1} Σ_i ((μi_1/n)^{2k} + (μi'_1/n)^{2k})`.
pub fn lemma_ub1_gap(mu: &DoubleDiagram, k: u64, x: i64) -> Result<(Rational, Rational)> {
    let n = mu.size();
    let m = mu.first.size();
    if m == 0 || 2 * m > n {
        return Err(Error::InvalidParameter {
            name: "mu",
            reason: alloc::format!("need 1 <= |mu1| <= n/2, got |mu1| = {m}, n = {n}"),
        });
    }
    if !(x == 0 || x == 1) {
        return Err(Error::InvalidParameter { name: "x", reason: alloc::format!("x must be 0 or 1, got {x}") });
    }
    let nr = Rational::from_integer(BigInt::from(n));
    let lhs: Rational = mu
        .last_box_content_spectrum()
        .iter()
        .map(|line| {
            let base = Rational::from_integer(BigInt::from(line.content + x)) / &nr;
            ratio::pow(&base, 2 * k) * ratio::from_uint(&line.count)
        })
        .sum();
    let term = |part: usize| ratio::pow(&(Rational::from_integer(BigInt::from(part)) / &nr), 2 * k);
    let inner: Rational = [&mu.first, &mu.second]
        .iter()
        .map(|p| term(p.largest_part()) + term(p.conjugate().largest_part()))
        .sum();
    let coeff = binomial(n, m) * mu.first.syt_count() * mu.second.syt_count();
    Ok((lhs, ratio::from_uint(&coeff) * inner))
}

/// Both sides of `Σ_{λ ⊢ ℓ} d_λ² (λ₁/ℓ)^{2k} < exp(ℓ² e^{−2k/ℓ})`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ub2Gap {
    pub lhs: Rational,
    pub rhs: f64,
    /// `ln lhs`, taken as `log1p(lhs − 1)` so values next to 1 keep their precision.
    pub log_lhs: f64,
    /// `ℓ² e^{−2k/ℓ}`, the exponent of the right side.
    pub log_rhs: f64,
}

impl Ub2Gap {
    /// The strict inequality, compared through logarithms because the right
    /// side rounds to 1 in `f64` once `k` is large.
    pub fn holds(&self) -> bool {
        self.log_lhs < self.log_rhs
    }
}

pub fn lemma_ub2_gap(l: usize, k: u64) -> Result<Ub2Gap> {
    if l == 0 {
        return Err(Error::InvalidParameter { name: "l", reason: "l must be at least 1".into() });
    }
    let lr = Rational::from_integer(BigInt::from(l));
    let lhs: Rational = enumerate_partitions(l)?
        .iter()
        .map(|p| {
            let d = p.syt_count();
            let base = Rational::from_integer(BigInt::from(p.largest_part())) / &lr;
            ratio::pow(&base, 2 * k) * ratio::from_uint(&(&d * &d))
        })
        .sum();
    let lf = l as f64;
    let log_rhs = lf * lf * libm::exp(-2.0 * k as f64 / lf);
    let log_lhs = libm::log1p(ratio::to_f64(&(&lhs - Rational::one())));
    Ok(Ub2Gap { lhs, rhs: libm::exp(log_rhs), log_lhs, log_rhs })
}

/// `⌈ℓ ln ℓ⌉`.
pub fn ceil_l_ln_l(l: usize) -> u64 {
    libm::ceil(l as f64 * libm::log(l as f64)) as u64
}
