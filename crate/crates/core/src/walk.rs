//! The four walks and their one-step measures.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{Generator, GroupId, SignedPermutation};
use crate::ratio::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkKind {
    /// Flip-transpose top with random shuffle on `B_n` (measure `P`).
    FlipTransposeTopB,
    /// Biased variant `P_α`, `α ∈ [0,1]`.
    BiasedFlipTransposeTopB { alpha: Rational },
    /// The analogous walk on `D_n` (measure `Q`).
    FlipTransposeTopD,
    /// Lazy transpose top with random shuffle on `S_n` (measure `𝒫_a`), `a ∈ (0,1)`.
    TransposeTopS { a: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSpec {
    kind: WalkKind,
    n: usize,
}

impl WalkSpec {
    pub fn new(kind: WalkKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter { name: "n", reason: "walks need n >= 2".into() });
        }
        match &kind {
            WalkKind::BiasedFlipTransposeTopB { alpha } => {
                if alpha.is_negative() || *alpha > Rational::one() {
                    return Err(Error::InvalidParameter {
                        name: "alpha",
                        reason: ratio::format_exact(alpha) + " is outside [0,1]",
                    });
                }
            }
            WalkKind::TransposeTopS { a } => {
                if !a.is_positive() || *a >= Rational::one() {
                    return Err(Error::InvalidParameter {
                        name: "a",
                        reason: ratio::format_exact(a) + " is outside (0,1)",
                    });
                }
            }
            WalkKind::FlipTransposeTopB | WalkKind::FlipTransposeTopD => {}
        }
        Ok(Self { kind, n })
    }

    pub fn bn(n: usize) -> Result<Self> {
        Self::new(WalkKind::FlipTransposeTopB, n)
    }

    pub fn bn_alpha(n: usize, alpha: Rational) -> Result<Self> {
        Self::new(WalkKind::BiasedFlipTransposeTopB { alpha }, n)
    }

    pub fn dn(n: usize) -> Result<Self> {
        Self::new(WalkKind::FlipTransposeTopD, n)
    }

    pub fn sn(n: usize, a: Rational) -> Result<Self> {
        Self::new(WalkKind::TransposeTopS { a }, n)
    }

    pub fn kind(&self) -> &WalkKind {
        &self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> GroupId {
        match self.kind {
            WalkKind::FlipTransposeTopB | WalkKind::BiasedFlipTransposeTopB { .. } => GroupId::b(self.n),
            WalkKind::FlipTransposeTopD => GroupId::d(self.n),
            WalkKind::TransposeTopS { .. } => GroupId::s(self.n),
        }
    }

    /// Short tag used in file outputs: `bn`, `bn-alpha`, `dn` or `sn`.
    pub fn tag(&self) -> &'static str {
        match self.kind {
            WalkKind::FlipTransposeTopB => "bn",
            WalkKind::BiasedFlipTransposeTopB { .. } => "bn-alpha",
            WalkKind::FlipTransposeTopD => "dn",
            WalkKind::TransposeTopS { .. } => "sn",
        }
    }

    /// The `a` of the lazy `S_n` walk this walk projects onto under `|·|`.
    pub fn projected_laziness(&self) -> Rational {
        let n = self.n as i64;
        match &self.kind {
            WalkKind::FlipTransposeTopB | WalkKind::BiasedFlipTransposeTopB { .. } => ratio::rational(1, n),
            WalkKind::FlipTransposeTopD => ratio::rational(1, 2 * n - 1),
            WalkKind::TransposeTopS { a } => a.clone(),
        }
    }

    pub fn step_measure(&self) -> StepMeasure {
        let n = self.n;
        let gen = |g| SignedPermutation::generator(g, n).expect("index within 1..=n");
        let tops = || {
            let mut v = Vec::with_capacity(2 * n);
            v.push(SignedPermutation::identity(n));
            v.extend((1..n).map(|i| gen(Generator::Transpose(i))));
            v
        };
        let mut builder = MeasureBuilder::default();
        match &self.kind {
            WalkKind::FlipTransposeTopB => {
                let w = ratio::rational(1, 2 * n as i64);
                for s in tops().into_iter().chain((1..=n).map(|i| gen(Generator::FlipTranspose(i)))) {
                    builder.add(s, w.clone());
                }
            }
            WalkKind::BiasedFlipTransposeTopB { alpha } => {
                // (α·1 + (1-α)·(-n,n)) · (1 + (-n,n) + Σ_{i<n} [(i,n) + (-i,n)]) / 2n
                let base: Vec<_> = tops().into_iter().chain((1..=n).map(|i| gen(Generator::FlipTranspose(i)))).collect();
                let neg_last = gen(Generator::NegLast);
                let two_n = Rational::from_integer(BigInt::from(2 * n));
                let w_keep = alpha / &two_n;
                let w_flip = (Rational::one() - alpha) / &two_n;
                for s in &base {
                    builder.add(s.clone(), w_keep.clone());
                    builder.add(neg_last.compose_unchecked(s), w_flip.clone());
                }
            }
            WalkKind::FlipTransposeTopD => {
                let w = ratio::rational(1, 2 * n as i64 - 1);
                for s in tops().into_iter().chain((1..n).map(|i| gen(Generator::FlipTranspose(i)))) {
                    builder.add(s, w.clone());
                }
            }
            WalkKind::TransposeTopS { a } => {
                builder.add(SignedPermutation::identity(n), a.clone());
                let w = (Rational::one() - a) / Rational::from_integer(BigInt::from(n - 1));
                for i in 1..n {
                    builder.add(gen(Generator::Transpose(i)), w.clone());
                }
            }
        }
        builder.finish(self.group())
    }
}

impl fmt::Display for WalkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            WalkKind::BiasedFlipTransposeTopB { alpha } => {
                write!(f, "{} n={} alpha={}", self.tag(), self.n, ratio::format_exact(alpha))
            }
            WalkKind::TransposeTopS { a } => write!(f, "{} n={} a={}", self.tag(), self.n, ratio::format_exact(a)),
            _ => write!(f, "{} n={}", self.tag(), self.n),
        }
    }
}

/// Finitely supported probability measure: distinct elements, positive weights
/// summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct StepMeasure {
    group: GroupId,
    support: Vec<(SignedPermutation, Rational)>,
}

#[derive(Default)]
struct MeasureBuilder {
    support: Vec<(SignedPermutation, Rational)>,
}

impl MeasureBuilder {
    fn add(&mut self, s: SignedPermutation, w: Rational) {
        if w.is_zero() {
            return;
        }
        match self.support.iter_mut().find(|(x, _)| *x == s) {
            Some((_, acc)) => *acc += w,
            None => self.support.push((s, w)),
        }
    }

    fn finish(self, group: GroupId) -> StepMeasure {
        StepMeasure { group, support: self.support }
    }
}

impl StepMeasure {
    /// Validates a user-supplied measure.
    pub fn new(group: GroupId, support: Vec<(SignedPermutation, Rational)>) -> Result<Self> {
        let mut total = Rational::zero();
        for (i, (s, w)) in support.iter().enumerate() {
            if !group.contains(s) {
                return Err(Error::NotInGroup(alloc::format!("{group}: {s}")));
            }
            if !w.is_positive() {
                return Err(Error::InvalidParameter { name: "weight", reason: "weights must be positive".into() });
            }
            if support[..i].iter().any(|(t, _)| t == s) {
                return Err(Error::InvalidParameter { name: "support", reason: alloc::format!("duplicate element {s}") });
            }
            total += w;
        }
        if !total.is_one() {
            return Err(Error::InvalidParameter {
                name: "weights",
                reason: String::from("sum to ") + &ratio::format_exact(&total),
            });
        }
        Ok(Self { group, support })
    }

    /// Point mass at the identity.
    pub fn identity(group: GroupId) -> Self {
        Self { group, support: alloc::vec![(group.identity(), Rational::one())] }
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn support(&self) -> &[(SignedPermutation, Rational)] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn prob(&self, x: &SignedPermutation) -> Rational {
        self.support.iter().find(|(s, _)| s == x).map(|(_, w)| w.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.support.iter().all(|(s, w)| self.prob(&s.inverse()) == *w)
    }

    /// Least common denominator of the weights, and the weights scaled by it.
    pub fn integer_weights(&self) -> (BigInt, Vec<BigInt>) {
        let lcd = self.support.iter().fold(BigInt::one(), |acc, (_, w)| acc.lcm(w.denom()));
        let weights = self.support.iter().map(|(_, w)| w.numer() * (&lcd / w.denom())).collect();
        (lcd, weights)
    }

    /// `Σ_s p(s) p(s⁻¹)`, the two-step return probability.
    pub fn two_step_return(&self) -> Rational {
        self.support.iter().map(|(s, w)| w * self.prob(&s.inverse())).sum()
    }

    pub fn describe(&self) -> String {
        let mut out = String::new();
        for (s, w) in &self.support {
            out += &s.to_string();
            out += " ";
            out += &ratio::format_exact(w);
            out += "\n";
        }
        out
    }
}
