//! Finite ground sets and bitmask subsets.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use crate::{Error, Result};

/// Hard ceiling on finite ground sets: subsets are single `u64` masks.
pub const MAX_POINTS: usize = 64;

/// A subset of a finite ground set `{0, .., n-1}` stored as a bitmask.
///
/// Ordering is numeric on the mask, which is the order used for reporting
/// "lexicographically smallest" witnesses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    /// The whole ground set of size `n`.
    pub fn full(n: usize) -> PointSet {
        debug_assert!(n <= MAX_POINTS);
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> PointSet {
        PointSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> PointSet {
        items
            .into_iter()
            .fold(PointSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> PointSet {
        PointSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> PointSet {
        PointSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to a ground set of size `n`.
    pub fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Every subset of `self`, in increasing mask order, starting with the
    /// empty set and ending with `self`.
    pub fn subsets(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Fails when the mask has bits at or above `n`.
    pub fn check_within(self, n: usize) -> Result<()> {
        if self.is_subset(PointSet::full(n)) {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                mask: self.0,
                ground: n,
            })
        }
    }
}

/// Iterator over the members of a [`PointSet`].
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Iterator over the subsets of a mask in increasing numeric order.
pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask above `cur` in increasing order
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(PointSet(cur))
    }
}

/// All `2^n` subsets of `{0, .., n-1}` in increasing mask order.
pub fn all_subsets(n: usize) -> Submasks {
    PointSet::full(n).subsets()
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 | rhs.0)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & rhs.0)
    }
}

impl BitXor for PointSet {
    type Output = PointSet;
    fn bitxor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 ^ rhs.0)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & !rhs.0)
    }
}

impl Not for PointSet {
    type Output = PointSet;
    fn not(self) -> PointSet {
        PointSet(!self.0)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered list of uniquely named points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<GroundSet> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_POINTS {
            return Err(Error::budget("points", names.len(), MAX_POINTS));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::invalid(format!("duplicate point name `{a}`")));
            }
        }
        Ok(GroundSet { names })
    }

    /// Points named `x0, x1, ..`.
    pub fn indexed(n: usize) -> GroundSet {
        assert!(n <= MAX_POINTS, "at most {MAX_POINTS} points");
        GroundSet {
            names: (0..n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// Resolves point names into a mask.
    pub fn subset<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Result<PointSet> {
        names.into_iter().try_fold(PointSet::EMPTY, |acc, name| {
            self.index_of(name)
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::invalid(format!("unknown point `{name}`")))
        })
    }

    /// Point names of a mask, in ground order.
    pub fn member_names(&self, s: PointSet) -> Vec<String> {
        s.iter().map(|i| self.names[i].clone()).collect()
    }

    pub fn format(&self, s: PointSet) -> String {
        format!("{{{}}}", self.member_names(s).join(", "))
    }

    /// The ground set restricted to the points of `s`, in order.
    pub fn restrict(&self, s: PointSet) -> GroundSet {
        GroundSet {
            names: self.member_names(s),
        }
    }
}

/// Re-indexes the members of `s` (a subset of `within`) as a subset of the
/// compacted ground `within.iter()`.
pub fn compress(s: PointSet, within: PointSet) -> PointSet {
    PointSet::from_indices(
        within
            .iter()
            .enumerate()
            .filter(|&(_, p)| s.contains(p))
            .map(|(k, _)| k),
    )
}

/// Inverse of [`compress`].
pub fn expand(s: PointSet, within: PointSet) -> PointSet {
    PointSet::from_indices(
        within
            .iter()
            .enumerate()
            .filter(|&(k, _)| s.contains(k))
            .map(|(_, p)| p),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_are_increasing_and_complete() {
        let m = PointSet(0b1011);
        let subs: Vec<u64> = m.subsets().map(|s| s.0).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(all_subsets(3).count(), 8);
        assert_eq!(all_subsets(0).map(|s| s.0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn compress_and_expand_are_inverse() {
        let within = PointSet(0b10110);
        for s in within.subsets() {
            assert_eq!(expand(compress(s, within), within), s);
        }
    }

    #[test]
    fn ground_rejects_duplicates_and_unknown_names() {
        assert!(GroundSet::new(["a", "a"]).is_err());
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        assert_eq!(g.subset(["a", "c"]).unwrap(), PointSet(0b101));
        assert!(g.subset(["d"]).is_err());
        assert_eq!(g.format(PointSet(0b110)), "{b, c}");
    }

    #[test]
    fn check_within_detects_foreign_points() {
        assert!(PointSet(0b100).check_within(2).is_err());
        assert!(PointSet(0b11).check_within(2).is_ok());
        assert_eq!(PointSet::full(64), PointSet(u64::MAX));
    }
}
