//! Eventually periodic subsets of ℤ.

use std::fmt;

use num_integer::Integer;
use rand::Rng;

use crate::{Error, Result};

/// Which unbounded side(s) of ℤ a progression runs towards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `start, start + step, start + 2·step, ..`
    Right,
    /// `start, start - step, start - 2·step, ..`
    Left,
    /// `start + k·step` for every integer `k`.
    Both,
}

/// An arithmetic progression term of the set syntax.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub start: i64,
    pub step: i64,
    pub direction: Direction,
}

/// A subset of ℤ that is periodic on `(-∞, L)` and on `[R, ∞)` with a
/// common period, stored in canonical form.
///
/// Canonical form: the period is the least common multiple of the minimal
/// periods of the two tails, `R` is the smallest right threshold, `L` the
/// largest left threshold not exceeding `R`; a set that is periodic on all
/// of ℤ has `L = R = 0`. Two sets are equal iff their canonical forms are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpSet {
    period: i64,
    left_end: i64,
    right_start: i64,
    left: Vec<bool>,
    middle: Vec<bool>,
    right: Vec<bool>,
}

fn minimal_period(pattern: &[bool]) -> i64 {
    let p = pattern.len();
    (1..=p)
        .filter(|d| p.is_multiple_of(*d))
        .find(|&d| (0..p).all(|i| pattern[i] == pattern[(i + d) % p]))
        .unwrap_or(p) as i64
}

fn residue(n: i64, p: i64) -> usize {
    n.rem_euclid(p) as usize
}

impl EpSet {
    /// Builds the canonical form of the set described by `f`, which must be
    /// `period`-periodic on `(-∞, lo)` and on `[hi, ∞)` with `lo <= hi`.
    pub fn from_fn(period: i64, lo: i64, hi: i64, f: impl Fn(i64) -> bool) -> EpSet {
        assert!(period >= 1 && lo <= hi, "invalid periodic description");
        let rp: Vec<bool> = (0..period)
            .map(|r| f(hi + (r - hi).rem_euclid(period)))
            .collect();
        let lp: Vec<bool> = (0..period)
            .map(|r| f(lo - period + (r - (lo - period)).rem_euclid(period)))
            .collect();
        let q = minimal_period(&rp).lcm(&minimal_period(&lp));
        let rq: Vec<bool> = rp[..q as usize].to_vec();
        let lq: Vec<bool> = lp[..q as usize].to_vec();
        let right_ok = |n: i64| f(n) == rq[residue(n, q)];
        let left_ok = |n: i64| f(n) == lq[residue(n, q)];

        let (l, r) = if rq == lq {
            let exceptions: Vec<i64> = (lo..hi).filter(|&n| !right_ok(n)).collect();
            match (exceptions.first(), exceptions.last()) {
                (Some(&a), Some(&b)) => (a, b + 1),
                _ => (0, 0),
            }
        } else {
            // the tails differ on every window of q consecutive integers, so
            // both scans stop within (hi - lo) + q steps
            let mut r = hi;
            while right_ok(r - 1) {
                r -= 1;
            }
            let mut l = lo;
            while left_ok(l) {
                l += 1;
            }
            (l.min(r), r)
        };
        let middle = (l..r).map(&f).collect();
        EpSet {
            period: q,
            left_end: l,
            right_start: r,
            left: lq,
            middle,
            right: rq,
        }
    }

    pub fn empty() -> EpSet {
        EpSet::from_fn(1, 0, 0, |_| false)
    }

    pub fn all() -> EpSet {
        EpSet::from_fn(1, 0, 0, |_| true)
    }

    /// `{0, 1, 2, ..}`.
    pub fn naturals() -> EpSet {
        EpSet::progression(0, 1, Direction::Right)
    }

    /// `{.., -2, -1, 0}`.
    pub fn negative_naturals() -> EpSet {
        EpSet::progression(0, 1, Direction::Left)
    }

    pub fn finite(points: impl IntoIterator<Item = i64>) -> EpSet {
        let mut pts: Vec<i64> = points.into_iter().collect();
        pts.sort_unstable();
        pts.dedup();
        match (pts.first(), pts.last()) {
            (Some(&lo), Some(&hi)) => {
                EpSet::from_fn(1, lo, hi + 1, |n| pts.binary_search(&n).is_ok())
            }
            _ => EpSet::empty(),
        }
    }

    /// `[lo, hi]` (empty when `lo > hi`).
    pub fn interval(lo: i64, hi: i64) -> EpSet {
        if lo > hi {
            return EpSet::empty();
        }
        EpSet::from_fn(1, lo, hi + 1, |n| lo <= n && n <= hi)
    }

    /// A single progression; `step` must be positive.
    pub fn progression(start: i64, step: i64, direction: Direction) -> EpSet {
        assert!(step >= 1, "progression step must be positive");
        let on_grid = move |n: i64| (n - start).rem_euclid(step) == 0;
        match direction {
            Direction::Right => {
                EpSet::from_fn(step, start, start, move |n| n >= start && on_grid(n))
            }
            Direction::Left => EpSet::from_fn(step, start + 1, start + 1, move |n| {
                n <= start && on_grid(n)
            }),
            Direction::Both => EpSet::from_fn(step, 0, 0, on_grid),
        }
    }

    /// Union of progression terms and a finite part.
    pub fn from_terms(terms: &[Term], finite: &[i64]) -> Result<EpSet> {
        let mut set = EpSet::finite(finite.iter().copied());
        for t in terms {
            if t.step < 1 {
                return Err(Error::invalid(format!(
                    "progression step {} must be positive",
                    t.step
                )));
            }
            set = set.union(&EpSet::progression(t.start, t.step, t.direction));
        }
        Ok(set)
    }

    /// Progression terms (one per residue on each tail) and the finite
    /// middle part, such that [`from_terms`](Self::from_terms) rebuilds the
    /// set.
    pub fn to_terms(&self) -> (Vec<Term>, Vec<i64>) {
        let p = self.period;
        let mut terms = Vec::new();
        for r in 0..p {
            if self.left[r as usize] {
                // largest n < L with n ≡ r
                let start = self.left_end - 1 - (self.left_end - 1 - r).rem_euclid(p);
                terms.push(Term {
                    start,
                    step: p,
                    direction: Direction::Left,
                });
            }
        }
        for r in 0..p {
            if self.right[r as usize] {
                let start = self.right_start + (r - self.right_start).rem_euclid(p);
                terms.push(Term {
                    start,
                    step: p,
                    direction: Direction::Right,
                });
            }
        }
        let finite = self.middle_points().collect();
        (terms, finite)
    }

    fn middle_points(&self) -> impl Iterator<Item = i64> + '_ {
        self.middle
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| self.left_end + i as i64)
    }

    pub fn period(&self) -> i64 {
        self.period
    }

    /// `L`: the left pattern holds below this point.
    pub fn left_threshold(&self) -> i64 {
        self.left_end
    }

    /// `R`: the right pattern holds from this point on.
    pub fn right_threshold(&self) -> i64 {
        self.right_start
    }

    /// Residues (mod the period) present on the right tail.
    pub fn right_residues(&self) -> Vec<i64> {
        (0..self.period)
            .filter(|&r| self.right[r as usize])
            .collect()
    }

    /// Residues (mod the period) present on the left tail.
    pub fn left_residues(&self) -> Vec<i64> {
        (0..self.period)
            .filter(|&r| self.left[r as usize])
            .collect()
    }

    pub fn contains(&self, n: i64) -> bool {
        if n >= self.right_start {
            self.right[residue(n, self.period)]
        } else if n < self.left_end {
            self.left[residue(n, self.period)]
        } else {
            self.middle[(n - self.left_end) as usize]
        }
    }

    pub fn right_unbounded(&self) -> bool {
        self.right.iter().any(|&b| b)
    }

    pub fn left_unbounded(&self) -> bool {
        self.left.iter().any(|&b| b)
    }

    pub fn is_finite(&self) -> bool {
        !self.right_unbounded() && !self.left_unbounded()
    }

    pub fn is_empty(&self) -> bool {
        self.is_finite() && !self.middle.iter().any(|&b| b)
    }

    /// Members of a finite set in increasing order.
    pub fn finite_points(&self) -> Option<Vec<i64>> {
        self.is_finite().then(|| self.middle_points().collect())
    }

    pub fn min_point(&self) -> Option<i64> {
        if self.left_unbounded() {
            return None;
        }
        self.middle_points().next().or_else(|| {
            (0..self.period)
                .map(|k| self.right_start + k)
                .find(|&n| self.right[residue(n, self.period)])
        })
    }

    pub fn max_point(&self) -> Option<i64> {
        if self.right_unbounded() {
            return None;
        }
        if let Some(m) = self.middle_points().last() {
            return Some(m);
        }
        (1..=self.period)
            .map(|k| self.left_end - k)
            .find(|&n| self.left[residue(n, self.period)])
    }

    /// A window `[lo, hi)` outside of which both tails are purely periodic.
    fn window(&self) -> (i64, i64) {
        (self.left_end, self.right_start)
    }

    fn combine(&self, other: &EpSet, op: impl Fn(bool, bool) -> bool) -> EpSet {
        let p = self.period.lcm(&other.period);
        let (a0, a1) = self.window();
        let (b0, b1) = other.window();
        EpSet::from_fn(p, a0.min(b0), a1.max(b1), |n| {
            op(self.contains(n), other.contains(n))
        })
    }

    pub fn union(&self, other: &EpSet) -> EpSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &EpSet) -> EpSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &EpSet) -> EpSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn symmetric_difference(&self, other: &EpSet) -> EpSet {
        self.combine(other, |a, b| a != b)
    }

    pub fn complement(&self) -> EpSet {
        let (lo, hi) = self.window();
        EpSet::from_fn(self.period, lo, hi, |n| !self.contains(n))
    }

    pub fn is_subset(&self, other: &EpSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn intersects(&self, other: &EpSet) -> bool {
        !self.intersection(other).is_empty()
    }

    /// `A + t`.
    pub fn translate(&self, t: i64) -> EpSet {
        let (lo, hi) = self.window();
        EpSet::from_fn(self.period, lo + t, hi + t, |n| self.contains(n - t))
    }

    /// `-A`.
    pub fn negate(&self) -> EpSet {
        let (lo, hi) = self.window();
        EpSet::from_fn(self.period, 1 - hi, 1 - lo, |n| self.contains(-n))
    }

    /// `B(A, r) = {n : |n - a| <= r for some a ∈ A}`.
    pub fn dilate(&self, r: u64) -> EpSet {
        let r = r as i64;
        let (lo, hi) = self.window();
        // window membership of [n - r, n + r] is periodic once it clears
        // the middle part
        EpSet::from_fn(self.period, lo - r, hi + r, |n| {
            (n - r..=n + r).any(|m| self.contains(m))
        })
    }

    /// `{k·a : a ∈ A}` for `k >= 1`.
    pub fn scale(&self, k: i64) -> EpSet {
        assert!(k >= 1, "scale factor must be positive");
        let (lo, hi) = self.window();
        EpSet::from_fn(self.period * k, lo * k, hi * k, |n| {
            n % k == 0 && self.contains(n / k)
        })
    }

    /// A random set with period at most `max_period` and exceptions inside
    /// `[-span, span]`; tails are empty with probability 1/4 each.
    pub fn random(rng: &mut impl Rng, max_period: i64, span: i64) -> EpSet {
        let p = rng.gen_range(1..=max_period);
        let lo = rng.gen_range(-span..=0);
        let hi = rng.gen_range(0..=span);
        let pattern = |rng: &mut dyn rand::RngCore| -> Vec<bool> {
            if rng.gen_range(0..4) == 0 {
                vec![false; p as usize]
            } else {
                (0..p).map(|_| rng.gen_bool(0.5)).collect()
            }
        };
        let left = pattern(rng);
        let right = pattern(rng);
        let middle: Vec<bool> = (lo..hi).map(|_| rng.gen_bool(0.3)).collect();
        EpSet::from_fn(p, lo, hi, |n| {
            if n >= hi {
                right[residue(n, p)]
            } else if n < lo {
                left[residue(n, p)]
            } else {
                middle[(n - lo) as usize]
            }
        })
    }
}

impl fmt::Display for EpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        if *self == EpSet::all() {
            return f.write_str("ℤ");
        }
        let (terms, finite) = self.to_terms();
        let mut parts: Vec<String> = terms
            .iter()
            .map(|t| match t.direction {
                Direction::Right => format!("{}+{}k", t.start, t.step),
                Direction::Left => format!("{}-{}k", t.start, t.step),
                Direction::Both => format!("{}±{}k", t.start, t.step),
            })
            .collect();
        if !finite.is_empty() {
            let pts: Vec<String> = finite.iter().map(i64::to_string).collect();
            parts.push(format!("{{{}}}", pts.join(", ")));
        }
        f.write_str(&parts.join(" ∪ "))
    }
}

impl fmt::Debug for EpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EpSet({self})")
    }
}
