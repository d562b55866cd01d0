//! Partitions, Young double-diagrams, standard (double-)tableaux and box
//! contents: the index set of the irreducible representations of `B_n` and of
//! their Gelfand–Tsetlin bases.
//!
//! Production code never enumerates tableaux. Multiplicities come from corner
//! removal: the number of standard tableaux with `n` in a removable corner `b`
//! equals the number of standard tableaux of the shape with `b` removed. Full
//! enumeration is kept for tests and verification.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub const DEFAULT_PARTITION_CAP: usize = 60;
pub const DEFAULT_SYT_CAP: usize = 12;
pub const DEFAULT_DOUBLE_TABLEAU_CAP: usize = 10;
pub const DEFAULT_DIAGRAM_CAP: usize = 40;

/// Weakly decreasing positive parts. The empty partition is a valid value.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Ordered pair of Young diagrams.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DoubleDiagram {
    pub first: Partition,
    pub second: Partition,
}

/// `1`-based index of a component of a double diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    First = 1,
    Second = 2,
}

/// A standard Young tableau, rows top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardDoubleTableau {
    pub shape: DoubleDiagram,
    pub first: Tableau,
    pub second: Tableau,
}

/// Content `column - row` of a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxContent(pub i64);

/// One removable corner of a double diagram and the number of standard
/// double-tableaux that put the largest entry there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerLine {
    pub content: i64,
    pub component: Component,
    pub count: BigUint,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            // trailing zeros are tolerated, interior ones are not
            while parts.last() == Some(&0) {
                parts.pop();
            }
            if parts.contains(&0) {
                return Err(Error::InvalidParameter {
                    name: "partition",
                    reason: format!("zero part in {parts:?}"),
                });
            }
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter {
                name: "partition",
                reason: format!("parts {parts:?} are not weakly decreasing"),
            });
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.largest_part();
        let parts = (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Self { parts }
    }

    /// `(row, column)` of each removable corner, 0-based, top to bottom.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        let l = self.parts.len();
        (0..l)
            .filter(|&i| i + 1 == l || self.parts[i + 1] < self.parts[i])
            .map(|i| (i, self.parts[i] - 1))
            .collect()
    }

    /// `(row, column)` of each addable cell.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let l = self.parts.len();
        let mut cells: Vec<_> = (0..l)
            .filter(|&i| i == 0 || self.parts[i - 1] > self.parts[i])
            .map(|i| (i, self.parts[i]))
            .collect();
        cells.push((l, 0));
        cells
    }

    pub fn without_box_in_row(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Self { parts }
    }

    pub fn with_box_in_row(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Self { parts }
    }

    /// Number of standard Young tableaux `d_λ`, by the hook length formula.
    pub fn syt_count(&self) -> BigUint {
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        factorial(self.size()) / hooks
    }
}

impl Ord for Partition {
    /// Size first, then reverse-lexicographic on parts, so that within one size
    /// `(3) > (2,1) > (1,1,1)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All partitions of `size`, in reverse-lexicographic order.
pub fn enumerate_partitions(size: usize) -> Result<Vec<Partition>> {
    enumerate_partitions_with_cap(size, DEFAULT_PARTITION_CAP)
}

pub fn enumerate_partitions_with_cap(size: usize, cap: usize) -> Result<Vec<Partition>> {
    if size > cap {
        return Err(Error::CapExceeded { what: "partition size", value: size as u64, cap: cap as u64 });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(size, size, &mut current, &mut out);
    Ok(out)
}

fn partitions_rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop();
    }
}

/// Standard Young tableaux of shape `λ`, guarded by [`DEFAULT_SYT_CAP`].
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<Tableau>> {
    enumerate_syt_with_cap(shape, DEFAULT_SYT_CAP)
}

pub fn enumerate_syt_with_cap(shape: &Partition, cap: usize) -> Result<Vec<Tableau>> {
    let n = shape.size();
    if n > cap {
        return Err(Error::CapExceeded { what: "tableau size", value: n as u64, cap: cap as u64 });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    syt_rec(shape, 1, &mut rows, &mut out);
    Ok(out)
}

fn syt_rec(shape: &Partition, next: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if next > shape.size() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    for i in 0..shape.parts.len() {
        let filled = rows.get(i).map_or(0, Vec::len);
        if filled >= shape.parts[i] {
            continue;
        }
        let above_ok = i == 0 || rows.get(i - 1).is_some_and(|r| r.len() > filled);
        if !above_ok {
            continue;
        }
        if i == rows.len() {
            rows.push(Vec::new());
        }
        rows[i].push(next);
        syt_rec(shape, next + 1, rows, out);
        rows[i].pop();
        if rows[i].is_empty() {
            rows.pop();
        }
    }
}

impl Tableau {
    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `(row, column)` holding `value`.
    pub fn position(&self, value: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, row)| row.iter().position(|&v| v == value).map(|j| (i, j)))
    }

    /// Rows and columns strictly increase and the shape is a partition.
    pub fn is_standard_for(&self, values: &[usize]) -> bool {
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) || self.rows.iter().any(Vec::is_empty) {
            return false;
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if i > 0 && row.iter().zip(&self.rows[i - 1]).any(|(b, a)| a >= b) {
                return false;
            }
        }
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all == values
    }
}

impl DoubleDiagram {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn component(&self, c: Component) -> &Partition {
        match c {
            Component::First => &self.first,
            Component::Second => &self.second,
        }
    }

    /// The diagram with its components swapped.
    pub fn swapped(&self) -> Self {
        Self { first: self.second.clone(), second: self.first.clone() }
    }

    /// `dim V^μ = C(n, |μ1|) · d_μ1 · d_μ2`.
    pub fn dimension(&self) -> BigUint {
        binomial(self.size(), self.first.size()) * self.first.syt_count() * self.second.syt_count()
    }

    /// Removable-corner decomposition of the position of the largest entry.
    pub fn last_box_content_spectrum(&self) -> Vec<CornerLine> {
        let mut out = Vec::new();
        for component in [Component::First, Component::Second] {
            for (row, col) in self.component(component).removable_corners() {
                let reduced = match component {
                    Component::First => DoubleDiagram::new(self.first.without_box_in_row(row), self.second.clone()),
                    Component::Second => DoubleDiagram::new(self.first.clone(), self.second.without_box_in_row(row)),
                };
                out.push(CornerLine { content: col as i64 - row as i64, component, count: reduced.dimension() });
            }
        }
        out
    }
}

impl Ord for DoubleDiagram {
    /// Larger first component first, then the second component.
    fn cmp(&self, other: &Self) -> Ordering {
        self.first.cmp(&other.first).then_with(|| self.second.cmp(&other.second))
    }
}

impl PartialOrd for DoubleDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every ordered pair `(μ1, μ2)` with `|μ1| + |μ2| = n`, starting at `((n), φ)`
/// and descending in the diagram order.
pub fn enumerate_double_diagrams(n: usize) -> Result<Vec<DoubleDiagram>> {
    enumerate_double_diagrams_with_cap(n, DEFAULT_DIAGRAM_CAP)
}

pub fn enumerate_double_diagrams_with_cap(n: usize, cap: usize) -> Result<Vec<DoubleDiagram>> {
    if n > cap {
        return Err(Error::CapExceeded { what: "diagram size", value: n as u64, cap: cap as u64 });
    }
    let by_size: Vec<Vec<Partition>> =
        (0..=n).map(|m| enumerate_partitions_with_cap(m, cap)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for m in (0..=n).rev() {
        for first in &by_size[m] {
            for second in &by_size[n - m] {
                out.push(DoubleDiagram::new(first.clone(), second.clone()));
            }
        }
    }
    Ok(out)
}

/// Standard double-tableaux of shape `μ`, guarded by [`DEFAULT_DOUBLE_TABLEAU_CAP`].
pub fn enumerate_double_tableaux(shape: &DoubleDiagram) -> Result<Vec<StandardDoubleTableau>> {
    enumerate_double_tableaux_with_cap(shape, DEFAULT_DOUBLE_TABLEAU_CAP)
}

pub fn enumerate_double_tableaux_with_cap(shape: &DoubleDiagram, cap: usize) -> Result<Vec<StandardDoubleTableau>> {
    let n = shape.size();
    if n > cap {
        return Err(Error::CapExceeded { what: "double tableau size", value: n as u64, cap: cap as u64 });
    }
    let m = shape.first.size();
    let firsts = enumerate_syt_with_cap(&shape.first, cap)?;
    let seconds = enumerate_syt_with_cap(&shape.second, cap)?;
    let mut out = Vec::new();
    for subset in subsets(n, m) {
        let complement: Vec<usize> = (1..=n).filter(|v| !subset.contains(v)).collect();
        for t1 in &firsts {
            for t2 in &seconds {
                out.push(StandardDoubleTableau {
                    shape: shape.clone(),
                    first: relabel(t1, &subset),
                    second: relabel(t2, &complement),
                });
            }
        }
    }
    Ok(out)
}

fn relabel(t: &Tableau, labels: &[usize]) -> Tableau {
    Tableau { rows: t.rows.iter().map(|r| r.iter().map(|&v| labels[v - 1]).collect()).collect() }
}

/// All `k`-subsets of `1..=n`, each sorted ascending.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

impl StandardDoubleTableau {
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `(component, row, column)` of `value`.
    pub fn position(&self, value: usize) -> Option<(Component, usize, usize)> {
        self.first
            .position(value)
            .map(|(r, c)| (Component::First, r, c))
            .or_else(|| self.second.position(value).map(|(r, c)| (Component::Second, r, c)))
    }

    pub fn content_of_entry(&self, value: usize) -> Result<BoxContent> {
        let (_, r, c) = self
            .position(value)
            .ok_or(Error::IndexOutOfRange { index: value, n: self.size() })?;
        Ok(BoxContent(c as i64 - r as i64))
    }

    pub fn is_valid(&self) -> bool {
        let n = self.size();
        let mut values: Vec<usize> = self.first.rows.iter().chain(&self.second.rows).flatten().copied().collect();
        values.sort_unstable();
        if values != (1..=n).collect::<Vec<_>>() {
            return false;
        }
        let v1: Vec<usize> = {
            let mut v: Vec<usize> = self.first.rows.iter().flatten().copied().collect();
            v.sort_unstable();
            v
        };
        let v2: Vec<usize> = {
            let mut v: Vec<usize> = self.second.rows.iter().flatten().copied().collect();
            v.sort_unstable();
            v
        };
        self.first.shape() == self.shape.first
            && self.second.shape() == self.shape.second
            && (self.first.rows.is_empty() || self.first.is_standard_for(&v1))
            && (self.second.rows.is_empty() || self.second.is_standard_for(&v2))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("φ");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DoubleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.first, self.second)
    }
}

impl fmt::Debug for DoubleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "φ" || s == "()" || s.eq_ignore_ascii_case("phi") {
            return Ok(Self::empty());
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (..) or φ, got {s:?}")))?;
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Self::new(parts)
    }
}

impl FromStr for DoubleDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (first|second), got {s:?}")))?;
        let (a, b) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in {s:?}")))?;
        Ok(Self::new(a.parse()?, b.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_small_sizes() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3).unwrap(), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
        assert!(enumerate_partitions(DEFAULT_PARTITION_CAP + 1).is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        for lambda in enumerate_partitions(8).unwrap() {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
            assert_eq!(lambda.conjugate().largest_part(), lambda.len());
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[5]).syt_count(), BigUint::one());
        assert_eq!(p(&[2, 1]).syt_count(), BigUint::from(2u32));
        assert_eq!(Partition::empty().syt_count(), BigUint::one());
        let total: BigUint = enumerate_partitions(5).unwrap().iter().map(|l| l.syt_count().pow(2)).sum();
        assert_eq!(total, BigUint::from(120u32));
    }

    #[test]
    fn hook_length_matches_enumeration() {
        for size in 0..=10 {
            for lambda in enumerate_partitions(size).unwrap() {
                let tabs = enumerate_syt(&lambda).unwrap();
                assert_eq!(BigUint::from(tabs.len()), lambda.syt_count(), "{lambda}");
                let values: Vec<usize> = (1..=size).collect();
                assert!(tabs.iter().all(|t| t.rows.is_empty() || t.is_standard_for(&values)));
            }
        }
    }

    #[test]
    fn syt_examples() {
        assert_eq!(enumerate_syt(&p(&[1])).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&p(&[2, 2])).unwrap().len(), 2);
        assert!(enumerate_syt(&p(&[13])).is_err());
    }

    #[test]
    fn double_diagrams_of_three() {
        let all = enumerate_double_diagrams(3).unwrap();
        assert_eq!(all.len(), 10);
        let expected = [
            "((1,1,1)|φ)", "(φ|(1,1,1))", "((2,1)|φ)", "(φ|(2,1))", "((3)|φ)",
            "(φ|(3))", "((1,1)|(1))", "((1)|(1,1))", "((2)|(1))", "((1)|(2))",
        ];
        for e in expected {
            let d: DoubleDiagram = e.parse().unwrap();
            assert!(all.contains(&d), "{e}");
        }
        assert_eq!(all[0].to_string(), "((3)|φ)");
        let one = enumerate_double_diagrams(1).unwrap();
        assert_eq!(one.len(), 2);
    }

    #[test]
    fn double_diagram_count_is_a_convolution_of_partition_counts() {
        for n in 0..=12 {
            let conv: usize = (0..=n)
                .map(|m| enumerate_partitions(m).unwrap().len() * enumerate_partitions(n - m).unwrap().len())
                .sum();
            assert_eq!(enumerate_double_diagrams(n).unwrap().len(), conv);
        }
    }

    #[test]
    fn double_tableaux_counts() {
        let mu: DoubleDiagram = "((1)|(1,1))".parse().unwrap();
        let tabs = enumerate_double_tableaux(&mu).unwrap();
        assert_eq!(tabs.len(), 3);
        assert!(tabs.iter().all(StandardDoubleTableau::is_valid));
        let mu: DoubleDiagram = "((3)|φ)".parse().unwrap();
        assert_eq!(enumerate_double_tableaux(&mu).unwrap().len(), 1);
        let total: usize = enumerate_double_diagrams(3)
            .unwrap()
            .iter()
            .map(|d| enumerate_double_tableaux(d).unwrap().len().pow(2))
            .sum();
        assert_eq!(total, 48);
        for n in 1..=6 {
            for d in enumerate_double_diagrams(n).unwrap() {
                assert_eq!(BigUint::from(enumerate_double_tableaux(&d).unwrap().len()), d.dimension());
            }
        }
    }

    #[test]
    fn dimension_squares_sum_to_group_order() {
        for n in 1..=7 {
            let total: BigUint = enumerate_double_diagrams(n).unwrap().iter().map(|d| d.dimension().pow(2)).sum();
            assert_eq!(total, BigUint::from(2u32).pow(n as u32) * factorial(n));
        }
    }

    #[test]
    fn contents_of_the_eight_box_example() {
        let t = StandardDoubleTableau {
            shape: "((3,2)|(2,1))".parse().unwrap(),
            first: Tableau { rows: vec![vec![3, 4, 8], vec![6, 7]] },
            second: Tableau { rows: vec![vec![1, 2], vec![5]] },
        };
        assert!(t.is_valid());
        let contents: Vec<i64> = (1..=8).map(|i| t.content_of_entry(i).unwrap().0).collect();
        assert_eq!(contents, vec![0, 1, 0, 1, -1, -1, 0, 2]);
        assert!(t.content_of_entry(9).is_err());
    }

    #[test]
    fn entry_one_has_content_zero() {
        for d in enumerate_double_diagrams(4).unwrap() {
            for t in enumerate_double_tableaux(&d).unwrap() {
                assert_eq!(t.content_of_entry(1).unwrap(), BoxContent(0));
            }
        }
    }

    #[test]
    fn max_content_of_last_entry() {
        for d in enumerate_double_diagrams(5).unwrap() {
            let best = enumerate_double_tableaux(&d)
                .unwrap()
                .iter()
                .map(|t| t.content_of_entry(5).unwrap().0)
                .max()
                .unwrap();
            let expected = [&d.first, &d.second]
                .iter()
                .flat_map(|p| p.removable_corners())
                .map(|(r, c)| c as i64 - r as i64)
                .max()
                .unwrap();
            assert_eq!(best, expected, "{d}");
        }
    }

    #[test]
    fn corner_spectrum_examples() {
        let d: DoubleDiagram = "((4)|φ)".parse().unwrap();
        assert_eq!(
            d.last_box_content_spectrum(),
            vec![CornerLine { content: 3, component: Component::First, count: BigUint::one() }]
        );
        let d: DoubleDiagram = "((2,1)|φ)".parse().unwrap();
        let lines = d.last_box_content_spectrum();
        assert_eq!(lines.len(), 2);
        assert!(lines.contains(&CornerLine { content: 1, component: Component::First, count: BigUint::one() }));
        assert!(lines.contains(&CornerLine { content: -1, component: Component::First, count: BigUint::one() }));
    }

    #[test]
    fn corner_spectrum_matches_enumeration() {
        for n in 1..=8 {
            for d in enumerate_double_diagrams(n).unwrap() {
                let mut brute: Vec<(i64, Component)> = enumerate_double_tableaux_with_cap(&d, 8)
                    .unwrap()
                    .iter()
                    .map(|t| {
                        let (comp, r, c) = t.position(n).unwrap();
                        (c as i64 - r as i64, comp)
                    })
                    .collect();
                brute.sort();
                let mut fast: Vec<(i64, Component)> = Vec::new();
                for line in d.last_box_content_spectrum() {
                    let count: usize = line.count.try_into().unwrap();
                    fast.extend(core::iter::repeat_n((line.content, line.component), count));
                }
                fast.sort();
                assert_eq!(brute, fast, "{d}");
            }
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
        assert_eq!(Partition::empty().to_string(), "φ");
        let d = DoubleDiagram::new(p(&[3, 1]), p(&[2]));
        assert_eq!(d.to_string(), "((3,1)|(2))");
        assert_eq!("((3,1)|(2))".parse::<DoubleDiagram>().unwrap(), d);
        assert_eq!("(φ|(1))".parse::<DoubleDiagram>().unwrap().first, Partition::empty());
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("((1)(2))".parse::<DoubleDiagram>().is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(3, 5), BigUint::from(0u32));
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
