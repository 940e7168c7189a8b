//! Eventually affine maps on ℤ and their quantized versions into finite chains.

use std::fmt;

use num_integer::Integer;

use crate::line::{Direction, EpSet, LineRule};
use crate::relation::FiniteRelation;
use crate::set::{all_subsets, PointSet};
use crate::{Budget, Error, Result};

/// `n ↦ slope·n + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffinePiece {
    pub slope: i64,
    pub intercept: i64,
}

impl AffinePiece {
    pub fn new(slope: i64, intercept: i64) -> AffinePiece {
        AffinePiece { slope, intercept }
    }

    pub fn eval(self, n: i64) -> i64 {
        self.slope * n + self.intercept
    }

    /// The unique `n` with `eval(n) = m`, if any (`slope ≠ 0`).
    fn solve(self, m: i64) -> Option<i64> {
        if self.slope == 0 {
            return None;
        }
        let (q, r) = (m - self.intercept).div_rem(&self.slope);
        (r == 0).then_some(q)
    }
}

/// A map `ℤ → ℤ` given by a finite table on `[start, start + len)`, the left
/// piece below it and the right piece above it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyAffine {
    left: AffinePiece,
    right: AffinePiece,
    start: i64,
    middle: Vec<i64>,
}

impl fmt::Display for EventuallyAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let piece = |p: AffinePiece| format!("{}n{:+}", p.slope, p.intercept);
        if self.middle.is_empty() && self.left == self.right {
            return f.write_str(&piece(self.right));
        }
        write!(
            f,
            "{} below {}, {:?}, {} from {}",
            piece(self.left),
            self.start,
            self.middle,
            piece(self.right),
            self.end()
        )
    }
}

impl EventuallyAffine {
    pub fn new(
        left: AffinePiece,
        right: AffinePiece,
        start: i64,
        middle: Vec<i64>,
    ) -> EventuallyAffine {
        EventuallyAffine {
            left,
            right,
            start,
            middle,
        }
    }

    pub fn affine(slope: i64, intercept: i64) -> EventuallyAffine {
        let p = AffinePiece::new(slope, intercept);
        EventuallyAffine::new(p, p, 0, Vec::new())
    }

    pub fn translation(t: i64) -> EventuallyAffine {
        EventuallyAffine::affine(1, t)
    }

    pub fn left(&self) -> AffinePiece {
        self.left
    }

    pub fn right(&self) -> AffinePiece {
        self.right
    }

    fn end(&self) -> i64 {
        self.start + self.middle.len() as i64
    }

    pub fn eval(&self, n: i64) -> i64 {
        if n < self.start {
            self.left.eval(n)
        } else if n < self.end() {
            self.middle[(n - self.start) as usize]
        } else {
            self.right.eval(n)
        }
    }

    /// Images of bounded sets are bounded and bounded distance is kept:
    /// always true for integer slopes and a finite patch.
    pub fn is_bornologous(&self) -> bool {
        true
    }

    /// Preimages of bounded sets are bounded: both slopes are nonzero.
    pub fn is_coarse(&self) -> bool {
        self.left.slope != 0 && self.right.slope != 0
    }

    fn reach(&self) -> i64 {
        self.start.abs()
            + self.end().abs()
            + self.left.intercept.abs()
            + self.right.intercept.abs()
            + self.middle.iter().map(|v| v.abs()).max().unwrap_or(0)
            + 1
    }

    pub fn preimage(&self, a: &EpSet) -> EpSet {
        let m = self.reach() + a.left_threshold().abs() + a.right_threshold().abs() + a.period();
        EpSet::from_fn(a.period(), -m, m, |n| a.contains(self.eval(n)))
    }

    pub fn image(&self, a: &EpSet) -> EpSet {
        let tail_period = |p: AffinePiece| (p.slope.abs() * a.period()).max(1);
        let period = tail_period(self.left).lcm(&tail_period(self.right));
        let steepest = self.left.slope.abs().max(self.right.slope.abs()).max(1);
        let reach =
            self.reach() + a.left_threshold().abs() + a.right_threshold().abs() + a.period();
        let m = steepest * reach + self.reach() + period;
        let patch: Vec<i64> = (self.start..self.end())
            .filter(|&n| a.contains(n))
            .map(|n| self.eval(n))
            .collect();
        let flat_left = self.left.slope == 0
            && a.intersects(&EpSet::progression(self.start - 1, 1, Direction::Left));
        let flat_right = self.right.slope == 0
            && a.intersects(&EpSet::progression(self.end(), 1, Direction::Right));
        EpSet::from_fn(period, -m, m, |v| {
            patch.contains(&v)
                || (flat_left && v == self.left.intercept)
                || (flat_right && v == self.right.intercept)
                || self
                    .left
                    .solve(v)
                    .is_some_and(|n| n < self.start && a.contains(n))
                || self
                    .right
                    .solve(v)
                    .is_some_and(|n| n >= self.end() && a.contains(n))
        })
    }
}

/// Sets on which line continuity is tested: finite sets, half-lines,
/// residue classes and their one-sided tails, for periods up to `max_period`.
pub fn observable_family(max_period: i64) -> Vec<EpSet> {
    let mut out = vec![
        EpSet::empty(),
        EpSet::all(),
        EpSet::naturals(),
        EpSet::negative_naturals(),
        EpSet::finite([0]),
        EpSet::finite([-3, 4]),
        EpSet::naturals().translate(5),
        EpSet::negative_naturals().translate(-5),
        EpSet::naturals().union(&EpSet::progression(0, 2, Direction::Left)),
    ];
    for p in 2..=max_period {
        for r in 0..p {
            for d in [Direction::Right, Direction::Left, Direction::Both] {
                out.push(EpSet::progression(r, p, d));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Outcome of a continuity check on a family of sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineContinuity {
    pub continuous: bool,
    pub counterexample: Option<(EpSet, EpSet)>,
    pub pairs_checked: usize,
}

/// `A ⊥_Y C ⟹ f⁻¹(A) ⊥_X f⁻¹(C)` for `A, C` in `family` and in its image
/// under `f`.
pub fn line_continuity(
    f: &EventuallyAffine,
    source: LineRule,
    target: LineRule,
    family: &[EpSet],
    budget: &Budget,
) -> Result<LineContinuity> {
    let mut sets: Vec<EpSet> = family.to_vec();
    sets.extend(family.iter().map(|a| f.image(a)));
    sets.sort();
    sets.dedup();
    budget.require("line continuity family", sets.len(), budget.samples)?;
    let pre: Vec<EpSet> = sets.iter().map(|a| f.preimage(a)).collect();
    let mut pairs_checked = 0;
    for i in 0..sets.len() {
        for j in i..sets.len() {
            pairs_checked += 1;
            if target.orth(&sets[i], &sets[j]) && !source.orth(&pre[i], &pre[j]) {
                return Ok(LineContinuity {
                    continuous: false,
                    counterexample: Some((sets[i].clone(), sets[j].clone())),
                    pairs_checked,
                });
            }
        }
    }
    Ok(LineContinuity {
        continuous: true,
        counterexample: None,
        pairs_checked,
    })
}

/// Whether `f` and `g` stay a bounded distance apart, and if not the side
/// along which they drift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapParallelism {
    pub parallel: bool,
    pub diverging: Option<Direction>,
}

/// Pointwise criterion: `|f(n) - g(n)|` is bounded iff the slopes agree on
/// both sides.
pub fn parallel_line_maps(f: &EventuallyAffine, g: &EventuallyAffine) -> MapParallelism {
    let diverging = if f.right.slope != g.right.slope {
        Some(Direction::Right)
    } else if f.left.slope != g.left.slope {
        Some(Direction::Left)
    } else {
        None
    };
    MapParallelism {
        parallel: diverging.is_none(),
        diverging,
    }
}

/// A family member whose images under `f` and `g` are not parallel to each
/// other for the metric relation.
pub fn parallel_on_family(
    f: &EventuallyAffine,
    g: &EventuallyAffine,
    family: &[EpSet],
) -> Option<EpSet> {
    family
        .iter()
        .find(|a| {
            let (fa, ga) = (f.image(a), g.image(a));
            !(crate::line::parallel_sets(&fa, &ga) && crate::line::parallel_sets(&ga, &fa))
        })
        .cloned()
}

/// An eventually affine map reduced mod `levels`, landing in the chain
/// `{0, …, levels - 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantizedMap {
    map: EventuallyAffine,
    levels: usize,
}

impl QuantizedMap {
    pub fn new(map: EventuallyAffine, levels: usize) -> Result<QuantizedMap> {
        if !(1..=64).contains(&levels) {
            return Err(Error::invalid(format!(
                "a chain needs 1 to 64 levels, got {levels}"
            )));
        }
        Ok(QuantizedMap { map, levels })
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn eval(&self, n: i64) -> usize {
        self.map.eval(n).rem_euclid(self.levels as i64) as usize
    }

    /// Both tails are eventually constant: each slope is `0 mod levels`.
    pub fn has_constant_tails(&self) -> bool {
        let l = self.levels as i64;
        self.map.left.slope % l == 0 && self.map.right.slope % l == 0
    }

    pub fn preimage(&self, s: PointSet) -> EpSet {
        let m = self.map.reach() + self.levels as i64;
        EpSet::from_fn(self.levels as i64, -m, m, |n| s.contains(self.eval(n)))
    }
}

/// Continuity of a quantized map from the line with rule `source` into a
/// finite chain with relation `target`, over every pair of chain subsets.
pub fn quantized_continuity(
    f: &QuantizedMap,
    source: LineRule,
    target: &FiniteRelation,
) -> Result<Option<(PointSet, PointSet)>> {
    if target.n() != f.levels {
        return Err(Error::GroundSizeMismatch {
            left: target.n(),
            right: f.levels,
        });
    }
    let pre: Vec<EpSet> = all_subsets(f.levels).map(|s| f.preimage(s)).collect();
    for a in all_subsets(f.levels) {
        for c in all_subsets(f.levels) {
            if target.orth(a, c) && !source.orth(&pre[a.bits() as usize], &pre[c.bits() as usize]) {
                return Ok(Some((a, c)));
            }
        }
    }
    Ok(None)
}
