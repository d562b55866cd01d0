//! Signed permutations (the hyperoctahedral group `B_n`), its even-sign
//! subgroup `D_n`, and the symmetric group `S_n`.
//!
//! Elements are stored in window notation: entry `i` (0-based) is the image of
//! `i + 1`, a nonzero integer in `±1..=±n`. `S_n` is realised inside `B_n` as the
//! signed permutations with no negative entries, so a single element type and a
//! single composition law serve all three families.
//!
//! Composition is function composition with the right factor applied first:
//! `(p ∘ q)(i) = p(q(i))`. A walk step from `x` by `s` lands on `x ∘ s`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// An element of `B_n` in window notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

/// An element of `S_n`, as the list of images of `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Hyperoctahedral group `B_n`, order `2^n n!`.
    B,
    /// Demihyperoctahedral group `D_n`, order `2^(n-1) n!`.
    D,
    /// Symmetric group `S_n`, order `n!`.
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupId {
    pub family: Family,
    pub n: usize,
}

/// The four generator shapes used by the walks, in cycle notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `(i,n)`: swap positions `i` and `n`. `(n,n)` is the identity.
    Transpose(usize),
    /// `(-i,n)`: `i ↦ -n`, `n ↦ -i`. For `i = n` this is `(-n,n)`.
    FlipTranspose(usize),
    /// `(-i,i)`: flip the sign at `i`.
    Flip(usize),
    /// `(-n,n)`.
    NegLast,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self { window: (1..=n as i32).collect() }
    }

    /// Validates that the absolute values form a permutation of `1..=n`.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = alloc::vec![false; n];
        for &w in &window {
            let a = w.unsigned_abs() as usize;
            if w == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidElement(format!(
                    "window {window:?} is not a signed permutation of 1..={n}"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(Self { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of a signed point `i ∈ ±1..=±n`, using `π(-i) = -π(i)`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &w)| w == i as i32 + 1)
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch { left: self.n(), right: other.n() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let window = other.window.iter().map(|&q| self.apply(q)).collect();
        Self { window }
    }

    /// Overwrites `out` with `self ∘ other` without allocating.
    pub(crate) fn compose_into(&self, other: &Self, out: &mut Self) {
        for (o, &q) in out.window.iter_mut().zip(&other.window) {
            *o = self.apply(q);
        }
    }

    pub fn inverse(&self) -> Self {
        let mut window = alloc::vec![0i32; self.n()];
        for (i, &w) in self.window.iter().enumerate() {
            let target = w.unsigned_abs() as usize - 1;
            window[target] = if w < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        Self { window }
    }

    pub fn generator(kind: Generator, n: usize) -> Result<Self> {
        let check = |i: usize| {
            if i == 0 || i > n {
                Err(Error::IndexOutOfRange { index: i, n })
            } else {
                Ok(i)
            }
        };
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, n });
        }
        let mut p = Self::identity(n);
        let last = n - 1;
        match kind {
            Generator::Transpose(i) => {
                let i = check(i)? - 1;
                p.window.swap(i, last);
            }
            Generator::FlipTranspose(i) => {
                let i = check(i)? - 1;
                if i == last {
                    p.window[last] = -(n as i32);
                } else {
                    p.window[i] = -(n as i32);
                    p.window[last] = -(i as i32 + 1);
                }
            }
            Generator::Flip(i) => {
                let i = check(i)? - 1;
                p.window[i] = -p.window[i];
            }
            Generator::NegLast => {
                p.window[last] = -(n as i32);
            }
        }
        Ok(p)
    }

    pub fn negative_count(&self) -> usize {
        self.window.iter().filter(|&&w| w < 0).count()
    }

    /// The sign character `ξ`: `(-1)^(number of negative window entries)`.
    pub fn xi(&self) -> i8 {
        if self.negative_count().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_in_dn(&self) -> bool {
        self.xi() == 1
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&w| w > 0)
    }

    /// Forgets the signs: `i ↦ |π(i)|`. A surjective homomorphism `B_n → S_n`.
    pub fn project(&self) -> Permutation {
        Permutation { image: self.window.iter().map(|w| w.unsigned_abs()).collect() }
    }

    /// Number of `i` with `|π(i)| = i`, i.e. fixed points of the projection.
    pub fn projected_fixed_points(&self) -> usize {
        self.window
            .iter()
            .enumerate()
            .filter(|(i, w)| w.unsigned_abs() as usize == i + 1)
            .count()
    }

    fn sign_mask(&self) -> u64 {
        self.window
            .iter()
            .enumerate()
            .filter(|(_, &w)| w < 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    fn from_parts(perm: &Permutation, mask: u64) -> Self {
        let window = perm
            .image
            .iter()
            .enumerate()
            .map(|(i, &v)| if mask >> i & 1 == 1 { -(v as i32) } else { v as i32 })
            .collect();
        Self { window }
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (1..=n as u32).collect() }
    }

    pub fn from_image(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        let mut seen = alloc::vec![false; n];
        for &v in &image {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidElement(format!(
                    "image {image:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch { left: self.n(), right: other.n() });
        }
        let image = other.image.iter().map(|&q| self.image[q as usize - 1]).collect();
        Ok(Self { image })
    }

    pub fn inverse(&self) -> Self {
        let mut image = alloc::vec![0u32; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize - 1] = i as u32 + 1;
        }
        Self { image }
    }

    /// The transposition `s_(i,n)`; `s_(n,n)` is the identity.
    pub fn transposition(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.image.swap(i - 1, n - 1);
        Ok(p)
    }

    pub fn fixed_points(&self) -> usize {
        self.image.iter().enumerate().filter(|(i, &v)| v as usize == i + 1).count()
    }

    /// The same permutation as an element of `B_n` with all signs positive.
    pub fn to_signed(&self) -> SignedPermutation {
        SignedPermutation { window: self.image.iter().map(|&v| v as i32).collect() }
    }

    /// Lehmer-code rank; the identity has rank 0.
    pub fn lehmer_rank(&self) -> Result<u64> {
        let n = self.n();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller = self.image[i + 1..].iter().filter(|&&v| v < self.image[i]).count() as u64;
            rank = rank
                .checked_mul((n - i) as u64)
                .and_then(|r| r.checked_add(smaller))
                .ok_or(Error::Overflow("permutation rank"))?;
        }
        Ok(rank)
    }

    pub fn lehmer_unrank(mut index: u64, n: usize) -> Result<Self> {
        let order = factorial_u64(n)?;
        if index >= order {
            return Err(Error::RankOutOfRange { index, order });
        }
        let mut digits = alloc::vec![0usize; n];
        for i in (0..n).rev() {
            let radix = (n - i) as u64;
            digits[i] = (index % radix) as usize;
            index /= radix;
        }
        let mut pool: Vec<u32> = (1..=n as u32).collect();
        let image = digits.into_iter().map(|d| pool.remove(d)).collect();
        Ok(Self { image })
    }
}

pub(crate) fn factorial_u64(n: usize) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i)).ok_or(Error::Overflow("n!"))
}

impl GroupId {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter { name: "n", reason: "must be at least 1".into() });
        }
        if matches!(family, Family::B | Family::D) && n > 63 {
            return Err(Error::InvalidParameter { name: "n", reason: "sign bits must fit in 64".into() });
        }
        Ok(Self { family, n })
    }

    pub fn b(n: usize) -> Self {
        Self { family: Family::B, n }
    }

    pub fn d(n: usize) -> Self {
        Self { family: Family::D, n }
    }

    pub fn s(n: usize) -> Self {
        Self { family: Family::S, n }
    }

    /// Group order, or an overflow error when it does not fit in `u64`.
    pub fn order(&self) -> Result<u64> {
        let f = factorial_u64(self.n)?;
        let signs = match self.family {
            Family::B => self.n as u32,
            Family::D => self.n as u32 - 1,
            Family::S => 0,
        };
        1u64.checked_shl(signs)
            .filter(|_| signs < 64)
            .and_then(|s| s.checked_mul(f))
            .ok_or(Error::Overflow("group order"))
    }

    pub fn contains(&self, p: &SignedPermutation) -> bool {
        p.n() == self.n
            && match self.family {
                Family::B => true,
                Family::D => p.is_in_dn(),
                Family::S => p.is_unsigned(),
            }
    }

    pub fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.n)
    }

    /// Dense rank in `[0, |G|)`: Lehmer rank of `|π|` paired with the sign bits.
    /// For `D_n` the sign bit of position `n` is dropped and recovered from parity.
    pub fn rank(&self, p: &SignedPermutation) -> Result<u64> {
        if !self.contains(p) {
            return Err(Error::NotInGroup(format!("{self}: {p}")));
        }
        let perm_rank = p.project().lehmer_rank()?;
        let (bits, mask) = match self.family {
            Family::B => (self.n as u32, p.sign_mask()),
            Family::D => (self.n as u32 - 1, p.sign_mask() & ((1u64 << (self.n - 1)) - 1)),
            Family::S => (0, 0),
        };
        perm_rank
            .checked_mul(1u64 << bits)
            .map(|r| r | mask)
            .ok_or(Error::Overflow("rank"))
    }

    pub fn unrank(&self, index: u64) -> Result<SignedPermutation> {
        let order = self.order()?;
        if index >= order {
            return Err(Error::RankOutOfRange { index, order });
        }
        let n = self.n;
        let (perm_index, mask) = match self.family {
            Family::B => (index >> n, index & ((1u64 << n) - 1)),
            Family::D => {
                let low = index & ((1u64 << (n - 1)) - 1);
                let parity = u64::from(low.count_ones() % 2 == 1);
                (index >> (n - 1), low | parity << (n - 1))
            }
            Family::S => (index, 0),
        };
        let perm = Permutation::lehmer_unrank(perm_index, n)?;
        Ok(SignedPermutation::from_parts(&perm, mask))
    }

    pub fn name(&self) -> String {
        format!("{self}")
    }
}

/// Default enumeration caps: `n ≤ 8` for `S_n`, `n ≤ 6` for `B_n` and `D_n`.
pub fn default_enumeration_cap(family: Family) -> usize {
    match family {
        Family::S => 8,
        Family::B | Family::D => 6,
    }
}

/// All elements of `g` in rank order, guarded by the default cap.
pub fn enumerate_group(g: GroupId) -> Result<GroupElements> {
    enumerate_group_with_cap(g, default_enumeration_cap(g.family))
}

pub fn enumerate_group_with_cap(g: GroupId, max_n: usize) -> Result<GroupElements> {
    if g.n > max_n {
        return Err(Error::CapExceeded { what: "n", value: g.n as u64, cap: max_n as u64 });
    }
    Ok(GroupElements { group: g, next: 0, order: g.order()? })
}

/// Rank-ordered stream of group elements.
pub struct GroupElements {
    group: GroupId,
    next: u64,
    order: u64,
}

impl Iterator for GroupElements {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.order {
            return None;
        }
        let p = self.group.unrank(self.next).ok();
        self.next += 1;
        p
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.order - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GroupElements {}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::D => "D",
            Family::S => "S",
        })
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.window)
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.image)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_bracketed(s: &str) -> Result<Vec<i32>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..], got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            // accept the typographic minus as well as '-'
            let tok = tok.trim().replace('\u{2212}', "-");
            tok.parse::<i32>().map_err(|_| Error::Parse(format!("bad entry {tok:?} in {s:?}")))
        })
        .collect()
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_window(parse_bracketed(s)?)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_bracketed(s)?;
        if raw.iter().any(|&v| v <= 0) {
            return Err(Error::Parse(format!("permutation entries must be positive: {s:?}")));
        }
        Self::from_image(raw.into_iter().map(|v| v as u32).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn generator_identity_from_irreducibility_argument() {
        let t13 = SignedPermutation::generator(Generator::Transpose(1), 3).unwrap();
        let f33 = SignedPermutation::generator(Generator::FlipTranspose(3), 3).unwrap();
        let lhs = t13.compose(&f33).unwrap().compose(&t13).unwrap();
        let flip1 = SignedPermutation::generator(Generator::Flip(1), 3).unwrap();
        assert_eq!(lhs, flip1);
        assert_eq!(lhs.window(), &[-1, 2, 3]);
    }

    #[test]
    fn adjacent_transpositions_from_top_swaps() {
        // (i,i+1) = (i+1,n)(i,n)(i+1,n)
        let n = 5;
        for i in 1..n {
            let a = SignedPermutation::generator(Generator::Transpose(i + 1), n).unwrap();
            let b = SignedPermutation::generator(Generator::Transpose(i), n).unwrap();
            let got = a.compose(&b).unwrap().compose(&a).unwrap();
            let mut want = SignedPermutation::identity(n);
            want.window.swap(i - 1, i);
            assert_eq!(got, want);
        }
    }

    #[test]
    fn generator_windows() {
        let g = |k| SignedPermutation::generator(k, 3).unwrap();
        assert_eq!(g(Generator::Transpose(1)).window(), &[3, 2, 1]);
        assert_eq!(g(Generator::FlipTranspose(1)).window(), &[-3, 2, -1]);
        assert_eq!(g(Generator::NegLast).window(), &[1, 2, -3]);
        assert_eq!(g(Generator::FlipTranspose(3)), g(Generator::NegLast));
        assert!(g(Generator::Transpose(3)).is_identity());
        assert!(SignedPermutation::generator(Generator::Transpose(4), 3).is_err());
        assert!(SignedPermutation::generator(Generator::Flip(0), 3).is_err());
    }

    #[test]
    fn involutions() {
        let t23 = SignedPermutation::generator(Generator::Transpose(2), 3).unwrap();
        assert!(t23.compose(&t23).unwrap().is_identity());
        for i in 1..=4 {
            let g = SignedPermutation::generator(Generator::FlipTranspose(i), 4).unwrap();
            assert_eq!(g.inverse(), g);
        }
    }

    #[test]
    fn inverse_example() {
        let p = sp("[2,-3,1]");
        assert_eq!(p.inverse(), sp("[3,1,-2]"));
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(SignedPermutation::identity(4).inverse().is_identity());
    }

    #[test]
    fn compose_rejects_mismatched_rank() {
        let e = SignedPermutation::identity(3).compose(&SignedPermutation::identity(4));
        assert_eq!(e, Err(Error::RankMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn xi_and_dn() {
        assert_eq!(SignedPermutation::identity(3).xi(), 1);
        assert_eq!(sp("[-1,2,3]").xi(), -1);
        assert!(!sp("[-1,2,3]").is_in_dn());
        let count = enumerate_group(GroupId::b(3)).unwrap().filter(|p| p.is_in_dn()).count();
        assert_eq!(count, 24);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(sp("[-2,1,-3]").project().image(), &[2, 1, 3]);
        assert_eq!(SignedPermutation::identity(4).project(), Permutation::identity(4));
    }

    #[test]
    fn projection_is_a_homomorphism_on_b3() {
        let all: Vec<_> = enumerate_group(GroupId::b(3)).unwrap().collect();
        for p in &all {
            for q in &all {
                let lhs = p.compose(q).unwrap().project();
                let rhs = p.project().compose(&q.project()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(GroupId::b(4).order().unwrap(), 384);
        assert_eq!(GroupId::d(4).order().unwrap(), 192);
        assert_eq!(GroupId::s(5).order().unwrap(), 120);
        assert_eq!(GroupId::b(2).order().unwrap(), 8);
        assert_eq!(GroupId::d(1).order().unwrap(), 1);
        assert!(GroupId::b(25).order().is_err());
    }

    #[test]
    fn rank_roundtrip_all_families() {
        for g in [GroupId::b(3), GroupId::d(3), GroupId::s(4), GroupId::b(4), GroupId::d(4)] {
            let order = g.order().unwrap();
            let mut seen = vec![false; order as usize];
            for idx in 0..order {
                let p = g.unrank(idx).unwrap();
                assert!(g.contains(&p));
                assert_eq!(g.rank(&p).unwrap(), idx);
                assert!(!seen[idx as usize]);
                seen[idx as usize] = true;
            }
            assert_eq!(g.rank(&g.identity()).unwrap(), 0);
        }
    }

    #[test]
    fn rank_errors() {
        assert!(GroupId::d(3).rank(&sp("[-1,2,3]")).is_err());
        assert!(GroupId::s(3).rank(&sp("[-1,-2,3]")).is_err());
        assert!(matches!(GroupId::b(2).unrank(8), Err(Error::RankOutOfRange { .. })));
        assert!(GroupId::b(3).rank(&SignedPermutation::identity(4)).is_err());
    }

    #[test]
    fn enumeration() {
        let b2: Vec<_> = enumerate_group(GroupId::b(2)).unwrap().collect();
        assert_eq!(b2.len(), 8);
        assert!(b2[0].is_identity());
        let mut sorted = b2.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        assert!(enumerate_group(GroupId::b(7)).is_err());
        assert!(enumerate_group(GroupId::s(9)).is_err());
        assert_eq!(enumerate_group(GroupId::s(8)).unwrap().len(), 40320);
    }

    #[test]
    fn group_axioms_on_small_groups() {
        for g in [GroupId::b(3), GroupId::d(3), GroupId::s(4)] {
            let all: Vec<_> = enumerate_group(g).unwrap().collect();
            let e = g.identity();
            for p in &all {
                assert_eq!(&e.compose(p).unwrap(), p);
                assert_eq!(&p.compose(&e).unwrap(), p);
                assert!(p.compose(&p.inverse()).unwrap().is_identity());
                assert!(g.contains(&p.inverse()));
                for q in all.iter().step_by(5) {
                    let pq = p.compose(q).unwrap();
                    assert!(g.contains(&pq));
                    for r in all.iter().step_by(7) {
                        assert_eq!(
                            pq.compose(r).unwrap(),
                            p.compose(&q.compose(r).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn top_swaps_generate_bn() {
        for n in 2..=3 {
            let mut gens = Vec::new();
            for i in 1..n {
                gens.push(SignedPermutation::generator(Generator::Transpose(i), n).unwrap());
            }
            for i in 1..=n {
                gens.push(SignedPermutation::generator(Generator::FlipTranspose(i), n).unwrap());
            }
            let mut closure = vec![SignedPermutation::identity(n)];
            let mut frontier = closure.clone();
            while let Some(x) = frontier.pop() {
                for s in &gens {
                    let y = x.compose(s).unwrap();
                    if !closure.contains(&y) {
                        closure.push(y.clone());
                        frontier.push(y);
                    }
                }
            }
            closure.sort();
            let mut all: Vec<_> = enumerate_group(GroupId::b(n)).unwrap().collect();
            all.sort();
            assert_eq!(closure, all);
        }
    }

    #[test]
    fn projection_is_surjective() {
        let mut images: Vec<_> = enumerate_group(GroupId::b(3)).unwrap().map(|p| p.project()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 6);
    }

    #[test]
    fn text_form_roundtrip() {
        let p = sp("[-2,1,-3]");
        assert_eq!(alloc::format!("{p}"), "[-2,1,-3]");
        assert_eq!(sp("[\u{2212}2, 1, \u{2212}3]"), p);
        assert!("[1,1]".parse::<SignedPermutation>().is_err());
        assert!("[0,1]".parse::<SignedPermutation>().is_err());
        assert!("1,2".parse::<SignedPermutation>().is_err());
        let q: Permutation = "[2,1,3]".parse().unwrap();
        assert_eq!(alloc::format!("{q}"), "[2,1,3]");
    }
}
