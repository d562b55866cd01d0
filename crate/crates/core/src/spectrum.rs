//! Exact spectra of the transition operators, from last-box contents, and a
//! dense brute-force oracle.
//!
//! Every ordered double diagram is enumerated and weighted by its dimension
//! (the multiplicity of the irreducible in the regular representation). The
//! eigenvalue attached to a standard tableau depends only on the content and
//! component of the box holding `n`, so each removable corner contributes one
//! line whose multiplicity is `dim V^μ` times the number of tableaux ending
//! there.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::enumerate_group_with_cap;
use crate::ratio::{self, Rational};
use crate::tableaux::{binomial, enumerate_double_diagrams, enumerate_partitions, factorial, Component, DoubleDiagram, Partition};
use crate::walk::{WalkKind, WalkSpec};

pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 1000;

/// Where a spectral line comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineSource {
    /// An irreducible of `B_n` (or its restriction to `D_n`) and the component
    /// holding the largest entry.
    Diagram { diagram: DoubleDiagram, component: Component },
    /// A Specht module of `S_n`.
    Partition(Partition),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralLine {
    pub eigenvalue: Rational,
    pub multiplicity: BigUint,
    pub source: LineSource,
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidParameter { name: "n", reason: "spectra need n >= 2".into() })
    } else {
        Ok(())
    }
}

fn frac(num: i64, den: i64) -> Rational {
    ratio::rational(num, den)
}

/// Lines of `P̂(R)` for the flip-transpose top with random shuffle on `B_n`.
pub fn bn_spectrum(n: usize) -> Result<Vec<SpectralLine>> {
    bn_alpha_spectrum(n, &Rational::one())
}

/// Lines of `P̂_α(R)`: component-2 eigenvalues are scaled by `2α - 1`.
pub fn bn_alpha_spectrum(n: usize, alpha: &Rational) -> Result<Vec<SpectralLine>> {
    check_n(n)?;
    if alpha.is_negative() || *alpha > Rational::one() {
        return Err(Error::InvalidParameter { name: "alpha", reason: ratio::format_exact(alpha) + " is outside [0,1]" });
    }
    let scale = alpha * Rational::from_integer(BigInt::from(2)) - Rational::one();
    let n_i = n as i64;
    let mut lines = Vec::new();
    for diagram in enumerate_double_diagrams(n)? {
        let dim = diagram.dimension();
        for corner in diagram.last_box_content_spectrum() {
            let eigenvalue = match corner.component {
                Component::First => frac(corner.content + 1, n_i),
                Component::Second => frac(corner.content, n_i) * &scale,
            };
            lines.push(SpectralLine {
                eigenvalue,
                multiplicity: &dim * &corner.count,
                source: LineSource::Diagram { diagram: diagram.clone(), component: corner.component },
            });
        }
    }
    Ok(lines)
}

/// Lines of `Q̂(R)` for the walk on `D_n`.
///
/// Swapped pairs `(μ1, μ2)`, `(μ2, μ1)` restrict to the same `D_n` irreducible,
/// so only the representative with the larger first component is kept, with
/// weight `dim V^μ`. Diagrams with equal components split into two irreducibles
/// of half the dimension each; the weight is `dim V^μ / 2`.
pub fn dn_spectrum(n: usize) -> Result<Vec<SpectralLine>> {
    check_n(n)?;
    let den = 2 * n as i64 - 1;
    let two = BigUint::from(2u32);
    let mut lines = Vec::new();
    for diagram in enumerate_double_diagrams(n)? {
        let dim = diagram.dimension();
        let weight = match diagram.first.cmp(&diagram.second) {
            core::cmp::Ordering::Less => continue,
            core::cmp::Ordering::Greater => dim,
            core::cmp::Ordering::Equal => {
                let (half, rem) = dim.div_rem(&two);
                assert!(rem.is_zero(), "odd dimension {dim} for self-paired diagram {diagram}");
                half
            }
        };
        for corner in diagram.last_box_content_spectrum() {
            lines.push(SpectralLine {
                eigenvalue: frac(2 * corner.content + 1, den),
                multiplicity: &weight * &corner.count,
                source: LineSource::Diagram { diagram: diagram.clone(), component: corner.component },
            });
        }
    }
    Ok(lines)
}

/// Lines of `𝒫̂_a(R)` on `S_n`: `a + (1-a) c / (n-1)` for each corner content `c`.
pub fn sn_a_spectrum(n: usize, a: &Rational) -> Result<Vec<SpectralLine>> {
    check_n(n)?;
    if !a.is_positive() || *a >= Rational::one() {
        return Err(Error::InvalidParameter { name: "a", reason: ratio::format_exact(a) + " is outside (0,1)" });
    }
    let step = (Rational::one() - a) / Rational::from_integer(BigInt::from(n - 1));
    let mut lines = Vec::new();
    for lambda in enumerate_partitions(n)? {
        let d = lambda.syt_count();
        for (row, col) in lambda.removable_corners() {
            let content = col as i64 - row as i64;
            lines.push(SpectralLine {
                eigenvalue: a + &step * Rational::from_integer(BigInt::from(content)),
                multiplicity: &d * lambda.without_box_in_row(row).syt_count(),
                source: LineSource::Partition(lambda.clone()),
            });
        }
    }
    Ok(lines)
}

/// Dispatches on the walk kind.
pub fn spectrum(spec: &WalkSpec) -> Result<Vec<SpectralLine>> {
    match spec.kind() {
        WalkKind::FlipTransposeTopB => bn_spectrum(spec.n()),
        WalkKind::BiasedFlipTransposeTopB { alpha } => bn_alpha_spectrum(spec.n(), alpha),
        WalkKind::FlipTransposeTopD => dn_spectrum(spec.n()),
        WalkKind::TransposeTopS { a } => sn_a_spectrum(spec.n(), a),
    }
}

/// `Σ_{λ⊢m} d_λ Σ_{corners of content c} d_{λ - corner}`, keyed by `c`, for
/// `m = 0..=n`. Tableau counts come from the branching rule applied to the
/// previous size, so no hook products are formed.
fn corner_sums(n: usize) -> Result<Vec<BTreeMap<i64, BigUint>>> {
    let mut prev: BTreeMap<Partition, BigUint> = BTreeMap::new();
    prev.insert(Partition::empty(), BigUint::one());
    let mut out = alloc::vec![BTreeMap::new()];
    for m in 1..=n {
        let mut counts = BTreeMap::new();
        let mut sums: BTreeMap<i64, BigUint> = BTreeMap::new();
        for lambda in enumerate_partitions(m)? {
            let below: Vec<(i64, &BigUint)> = lambda
                .removable_corners()
                .into_iter()
                .map(|(row, col)| (col as i64 - row as i64, &prev[&lambda.without_box_in_row(row)]))
                .collect();
            let d: BigUint = below.iter().map(|(_, f)| *f).sum();
            for (c, f) in below {
                *sums.entry(c).or_default() += &d * f;
            }
            counts.insert(lambda, d);
        }
        prev = counts;
        out.push(sums);
    }
    Ok(out)
}

/// Equal to `aggregate(&spectrum(spec))`, without listing every double diagram.
///
/// Summing a component-1 corner line over the other component gives
/// `C(n,m) C(n-1,m-1) (n-m)!` times the corner sum at size `m`, so only the
/// partitions of each `m ≤ n` are visited. Component 2 is the same by symmetry.
pub fn aggregate_spectrum(spec: &WalkSpec) -> Result<Vec<(Rational, BigUint)>> {
    let n = spec.n();
    check_n(n)?;
    let mut map: BTreeMap<Rational, BigUint> = BTreeMap::new();
    let n_i = n as i64;
    if let WalkKind::TransposeTopS { a } = spec.kind() {
        let step = (Rational::one() - a) / Rational::from_integer(BigInt::from(n - 1));
        for (c, m) in corner_sums(n)?.pop().unwrap_or_default() {
            *map.entry(a + &step * Rational::from_integer(BigInt::from(c))).or_default() += m;
        }
        return Ok(map.into_iter().rev().collect());
    }
    let scale = match spec.kind() {
        WalkKind::BiasedFlipTransposeTopB { alpha } => Some(alpha * Rational::from_integer(BigInt::from(2)) - Rational::one()),
        WalkKind::FlipTransposeTopB => Some(Rational::one()),
        _ => None,
    };
    for (m, sums) in corner_sums(n)?.into_iter().enumerate().skip(1) {
        let weight = binomial(n, m) * binomial(n - 1, m - 1) * factorial(n - m);
        for (c, s) in sums {
            let mult = &weight * s;
            match &scale {
                Some(scale) => {
                    *map.entry(frac(c + 1, n_i)).or_default() += &mult;
                    *map.entry(frac(c, n_i) * scale).or_default() += mult;
                }
                // Half of both components' lines, and the two halves are equal.
                None => *map.entry(frac(2 * c + 1, 2 * n_i - 1)).or_default() += mult,
            }
        }
    }
    Ok(map.into_iter().rev().collect())
}

/// Groups equal eigenvalues; sorted by eigenvalue, largest first.
pub fn aggregate(lines: &[SpectralLine]) -> Vec<(Rational, BigUint)> {
    let mut map: BTreeMap<Rational, BigUint> = BTreeMap::new();
    for line in lines {
        *map.entry(line.eigenvalue.clone()).or_default() += &line.multiplicity;
    }
    map.into_iter().rev().collect()
}

pub fn total_multiplicity(lines: &[SpectralLine]) -> BigUint {
    lines.iter().map(|l| &l.multiplicity).sum()
}

/// `Σ multiplicity · eigenvalue^power`, i.e. the trace of the operator power.
pub fn trace_power(lines: &[SpectralLine], power: u64) -> Rational {
    aggregate(lines)
        .iter()
        .map(|(e, m)| ratio::pow(e, power) * ratio::from_uint(m))
        .sum()
}

/// Every eigenvalue repeated by multiplicity, as floats, largest first.
pub fn expand_sorted(lines: &[SpectralLine]) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (e, m) in aggregate(lines) {
        let count: usize = (&m).try_into().map_err(|_| Error::Overflow("spectrum expansion"))?;
        out.extend(core::iter::repeat_n(ratio::to_f64(&e), count));
    }
    Ok(out)
}

/// Dense row-stochastic matrix `M(x, y) = p(x⁻¹ y)` indexed by group rank.
pub fn transition_matrix(spec: &WalkSpec, cap: u64) -> Result<DMatrix<f64>> {
    let group = spec.group();
    let order = group.order()?;
    if order > cap {
        return Err(Error::CapExceeded { what: "group order", value: order, cap });
    }
    let measure = spec.step_measure();
    let weights: Vec<(crate::group::SignedPermutation, f64)> =
        measure.support().iter().map(|(s, w)| (s.clone(), ratio::to_f64(w))).collect();
    let size = order as usize;
    let mut m = DMatrix::<f64>::zeros(size, size);
    for (i, x) in enumerate_group_with_cap(group, usize::MAX)?.enumerate() {
        for (s, w) in &weights {
            let j = group.rank(&x.compose_unchecked(s))? as usize;
            m[(i, j)] += w;
        }
    }
    Ok(m)
}

/// Numeric eigenvalues of the transition matrix, largest first.
pub fn brute_force_spectrum(spec: &WalkSpec) -> Result<Vec<f64>> {
    brute_force_spectrum_with_cap(spec, DEFAULT_BRUTE_FORCE_CAP)
}

pub fn brute_force_spectrum_with_cap(spec: &WalkSpec, cap: u64) -> Result<Vec<f64>> {
    let m = transition_matrix(spec, cap)?;
    let size = m.nrows();
    for i in 0..size {
        for j in 0..i {
            if (m[(i, j)] - m[(j, i)]).abs() > 1e-15 {
                return Err(Error::InvalidParameter {
                    name: "measure",
                    reason: format!("transition matrix is not symmetric at ({i},{j})"),
                });
            }
        }
    }
    let mut eig: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(|a, b| b.total_cmp(a));
    Ok(eig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rational;
    use crate::tableaux::factorial;

    fn order_b(n: usize) -> BigUint {
        BigUint::from(2u32).pow(n as u32) * factorial(n)
    }

    fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn unit_eigenvalue_is_simple() {
        for n in 2..=7 {
            let agg = aggregate(&bn_spectrum(n).unwrap());
            assert_eq!(agg[0], (Rational::one(), BigUint::one()));
            assert_eq!(agg[1].0, rational(n as i64 - 1, n as i64));
            let agg = aggregate(&dn_spectrum(n).unwrap());
            assert_eq!(agg[0], (Rational::one(), BigUint::one()));
        }
    }

    #[test]
    fn total_multiplicities() {
        for n in 2..=7 {
            assert_eq!(total_multiplicity(&bn_spectrum(n).unwrap()), order_b(n));
            assert_eq!(total_multiplicity(&dn_spectrum(n).unwrap()), order_b(n) / 2u32);
            assert_eq!(total_multiplicity(&sn_a_spectrum(n, &rational(1, 3)).unwrap()), factorial(n));
        }
        assert_eq!(aggregate(&bn_spectrum(3).unwrap()).iter().map(|(_, m)| m).sum::<BigUint>(), BigUint::from(48u32));
        assert_eq!(total_multiplicity(&dn_spectrum(4).unwrap()), BigUint::from(192u32));
    }

    #[test]
    fn b3_matches_brute_force() {
        let spec = WalkSpec::bn(3).unwrap();
        let exact = expand_sorted(&spectrum(&spec).unwrap()).unwrap();
        let brute = brute_force_spectrum(&spec).unwrap();
        assert_eq!(brute.len(), 48);
        assert!(max_abs_diff(&exact, &brute) < 1e-9);
    }

    #[test]
    fn biased_degenerations() {
        let plain = bn_spectrum(4).unwrap();
        assert_eq!(bn_alpha_spectrum(4, &Rational::one()).unwrap(), plain);
        for line in bn_alpha_spectrum(4, &rational(1, 2)).unwrap() {
            if let LineSource::Diagram { component: Component::Second, .. } = line.source {
                assert!(line.eigenvalue.is_zero());
            }
        }
        assert!(bn_alpha_spectrum(3, &rational(3, 2)).is_err());
        let spec = WalkSpec::bn_alpha(3, rational(1, 4)).unwrap();
        let exact = expand_sorted(&spectrum(&spec).unwrap()).unwrap();
        assert!(max_abs_diff(&exact, &brute_force_spectrum(&spec).unwrap()) < 1e-9);
    }

    #[test]
    fn d3_matches_brute_force() {
        let spec = WalkSpec::dn(3).unwrap();
        let exact = expand_sorted(&spectrum(&spec).unwrap()).unwrap();
        let brute = brute_force_spectrum(&spec).unwrap();
        assert_eq!(brute.len(), 24);
        assert!(max_abs_diff(&exact, &brute) < 1e-9);
    }

    #[test]
    fn standard_representation_lines() {
        for n in 4..=7 {
            let a = rational(1, 4);
            let lines = sn_a_spectrum(n, &a).unwrap();
            let n_i = n as i64;
            let hook = Partition::new(alloc::vec![n - 1, 1]).unwrap();
            let mut std_lines: Vec<_> = lines
                .iter()
                .filter(|l| l.source == LineSource::Partition(hook.clone()))
                .map(|l| (l.eigenvalue.clone(), l.multiplicity.clone()))
                .collect();
            std_lines.sort();
            let mut want = alloc::vec![
                ((Rational::from_integer(BigInt::from(n_i - 2)) + &a) / rational(n_i - 1, 1), BigUint::from(n - 2)),
                ((&a * rational(n_i, 1) - Rational::one()) / rational(n_i - 1, 1), BigUint::one()),
            ];
            want.sort();
            // multiplicities above are per-copy counts; each line carries d_λ = n - 1 copies
            for (w, l) in want.iter().zip(&std_lines) {
                assert_eq!(w.0, l.0);
                assert_eq!(&w.1 * BigUint::from(n - 1), l.1);
            }
            let two_row = Partition::new(alloc::vec![n - 2, 2]).unwrap();
            let d = two_row.syt_count();
            let lazy: BigUint = lines
                .iter()
                .filter(|l| l.source == LineSource::Partition(two_row.clone()) && l.eigenvalue == a)
                .map(|l| l.multiplicity.clone())
                .sum();
            assert_eq!(lazy, BigUint::from(n - 2) * d);
        }
    }

    #[test]
    fn s4_matches_brute_force() {
        let spec = WalkSpec::sn(4, rational(1, 4)).unwrap();
        let exact = expand_sorted(&spectrum(&spec).unwrap()).unwrap();
        assert!(max_abs_diff(&exact, &brute_force_spectrum(&spec).unwrap()) < 1e-9);
    }

    #[test]
    fn brute_force_trace_and_top_eigenvalue() {
        let spec = WalkSpec::bn(3).unwrap();
        let eig = brute_force_spectrum(&spec).unwrap();
        assert!((eig[0] - 1.0).abs() < 1e-12);
        let trace: f64 = eig.iter().sum();
        assert!((trace - 48.0 / 6.0).abs() < 1e-9);
        assert!(brute_force_spectrum_with_cap(&spec, 10).is_err());
    }

    #[test]
    fn exact_trace_identities() {
        for n in 2..=5 {
            let n_i = n as i64;
            let b = order_b(n);
            assert_eq!(trace_power(&bn_spectrum(n).unwrap(), 1), ratio::from_uint(&b) * rational(1, 2 * n_i));
            assert_eq!(
                trace_power(&dn_spectrum(n).unwrap(), 1),
                ratio::from_uint(&(&b / 2u32)) * rational(1, 2 * n_i - 1)
            );
            let a = rational(1, 3);
            assert_eq!(trace_power(&sn_a_spectrum(n, &a).unwrap(), 1), ratio::from_uint(&factorial(n)) * &a);
        }
    }

    #[test]
    fn eigenvalue_ranges() {
        for n in 2..=7 {
            for l in bn_spectrum(n).unwrap() {
                assert!(l.eigenvalue.abs() <= Rational::one());
            }
            let lo = -rational(2 * n as i64 - 3, 2 * n as i64 - 1);
            for l in dn_spectrum(n).unwrap() {
                assert!(l.eigenvalue >= lo && l.eigenvalue <= Rational::one());
            }
        }
    }

    #[test]
    fn aggregate_spectrum_matches_line_listing() {
        for n in 2..=8 {
            let specs = [
                WalkSpec::bn(n).unwrap(),
                WalkSpec::dn(n).unwrap(),
                WalkSpec::bn_alpha(n, frac(1, 3)).unwrap(),
                WalkSpec::bn_alpha(n, frac(1, 2)).unwrap(),
                WalkSpec::bn_alpha(n, frac(0, 1)).unwrap(),
                WalkSpec::sn(n, frac(1, n as i64)).unwrap(),
            ];
            for spec in specs {
                assert_eq!(aggregate_spectrum(&spec).unwrap(), aggregate(&spectrum(&spec).unwrap()), "{spec:?}");
            }
        }
    }

    #[test]
    fn aggregation_is_order_independent() {
        let mut lines = bn_spectrum(4).unwrap();
        let forward = aggregate(&lines);
        lines.reverse();
        assert_eq!(aggregate(&lines), forward);
        let single = &lines[..1];
        assert_eq!(aggregate(single), alloc::vec![(single[0].eigenvalue.clone(), single[0].multiplicity.clone())]);
    }
}
