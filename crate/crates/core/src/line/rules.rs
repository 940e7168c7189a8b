//! Large-scale orthogonality rules on ℤ, decided from canonical forms.

use num_integer::Integer;

use super::EpSet;

/// Which unbounded sides of ℤ a set reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Sides {
    pub left: bool,
    pub right: bool,
}

impl Sides {
    pub fn of(a: &EpSet) -> Sides {
        Sides {
            left: a.left_unbounded(),
            right: a.right_unbounded(),
        }
    }

    pub fn meets(self, other: Sides) -> bool {
        (self.left && other.left) || (self.right && other.right)
    }

    pub fn is_subset(self, other: Sides) -> bool {
        (!self.left || other.left) && (!self.right || other.right)
    }
}

/// Bounded sets of the metric bornology on ℤ are the finite ones.
pub fn is_bounded(a: &EpSet) -> bool {
    a.is_finite()
}

/// `B(A, r) ∩ B(C, r)` is bounded for every `r`.
///
/// Gaps on an unbounded side are at most the period, so dilating by the
/// period fills that whole tail: the intersection is unbounded for some `r`
/// exactly when both sets reach a common side.
pub fn ls_orth_metric(a: &EpSet, c: &EpSet) -> bool {
    !Sides::of(a).meets(Sides::of(c))
}

/// `A ∩ C` is finite.
pub fn ls_orth_settheoretic(a: &EpSet, c: &EpSet) -> bool {
    a.intersection(c).is_finite()
}

/// Outcome of the translate-intersection test with `F = [-k, k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDecision {
    pub orthogonal: bool,
    /// Smallest `k` for which `(A + [-k, k]) ∩ (C + [-k, k])` is infinite.
    pub witness_k: Option<u64>,
    /// Largest `k` examined.
    pub checked_up_to: u64,
    /// `true` when `F_cap` stopped the search before the intervals became
    /// cofinal for these periods and the metric rule supplied the answer.
    pub decided_by_metric: bool,
    pub agrees_with_metric: bool,
    pub note: &'static str,
}

/// `(A·F) ∩ (C·F)` finite for every finite `F`, with `F` ranging over the
/// cofinal family `[-k, k]`, `k <= f_cap`.
pub fn group_orth(a: &EpSet, c: &EpSet, f_cap: u64) -> GroupDecision {
    // beyond this radius both dilations are whole tails on their sides
    let sufficient = a.period().max(c.period()) as u64;
    let limit = f_cap.min(sufficient);
    let witness_k = (0..=limit).find(|&k| !a.dilate(k).intersection(&c.dilate(k)).is_finite());
    let metric = ls_orth_metric(a, c);
    let decided_by_metric = witness_k.is_none() && limit < sufficient;
    let orthogonal = match witness_k {
        Some(_) => false,
        None if decided_by_metric => metric,
        None => true,
    };
    GroupDecision {
        orthogonal,
        witness_k,
        checked_up_to: limit,
        decided_by_metric,
        agrees_with_metric: orthogonal == metric,
        note: "translate-intersection orthogonality agrees with metric orthogonality for the word metric",
    }
}

/// The sequence `n ↦ a + b·n`, `n >= 0`, with `b != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineEnd {
    pub intercept: i64,
    pub slope: i64,
}

impl AffineEnd {
    pub fn new(intercept: i64, slope: i64) -> Option<AffineEnd> {
        (slope != 0).then_some(AffineEnd { intercept, slope })
    }

    pub fn term(&self, n: i64) -> i64 {
        self.intercept + self.slope * n
    }

    /// The reparameterization `n ↦ n + k`.
    pub fn shifted(&self, k: i64) -> AffineEnd {
        AffineEnd {
            intercept: self.term(k),
            slope: self.slope,
        }
    }

    /// Bounded difference of terms, i.e. equal slopes.
    pub fn is_parallel(&self, other: &AffineEnd) -> bool {
        self.slope == other.slope
    }

    /// Largest `|x_n - y_n|` over the first `terms` indices.
    pub fn drift(&self, other: &AffineEnd, terms: i64) -> i64 {
        (0..terms)
            .map(|n| (self.term(n) - other.term(n)).abs())
            .max()
            .unwrap_or(0)
    }

    /// Every term lies in `a`.
    pub fn lies_in(&self, a: &EpSet) -> bool {
        let direction = if self.slope > 0 {
            super::Direction::Right
        } else {
            super::Direction::Left
        };
        EpSet::progression(self.intercept, self.slope.abs(), direction).is_subset(a)
    }
}

/// Affine ends of `a` with slope `±step` (`step` a multiple of the period),
/// one per residue present on each unbounded side.
pub fn affine_ends(a: &EpSet, step: i64) -> Vec<AffineEnd> {
    let p = a.period();
    debug_assert_eq!(step % p, 0);
    let mut ends = Vec::new();
    for r in a.right_residues() {
        let start = a.right_threshold() + (r - a.right_threshold()).rem_euclid(p);
        ends.push(AffineEnd {
            intercept: start,
            slope: step,
        });
    }
    for r in a.left_residues() {
        let start = a.left_threshold() - 1 - (a.left_threshold() - 1 - r).rem_euclid(p);
        ends.push(AffineEnd {
            intercept: start,
            slope: -step,
        });
    }
    ends
}

/// A pair of parallel affine ends, one in each set, using the common slope
/// `lcm(p_A, p_C)`.
pub fn parallel_ends(a: &EpSet, c: &EpSet) -> Option<(AffineEnd, AffineEnd)> {
    let step = a.period().lcm(&c.period());
    let ends_a = affine_ends(a, step);
    let ends_c = affine_ends(c, step);
    ends_a
        .iter()
        .flat_map(|x| ends_c.iter().map(move |y| (*x, *y)))
        .find(|(x, y)| x.is_parallel(y))
}

/// Orthogonal iff the sets contain no parallel affine ends.
pub fn simple_ends_orth(a: &EpSet, c: &EpSet) -> bool {
    parallel_ends(a, c).is_none()
}

/// Points of `{-∞, +∞}` in the closure of `a` in `ℤ ∪ {-∞, +∞}`.
pub fn corona_trace(a: &EpSet) -> Sides {
    Sides::of(a)
}

/// Closures meet nowhere on the corona `{-∞, +∞}`.
pub fn ends_compactification_orth(a: &EpSet, c: &EpSet) -> bool {
    let (ta, tc) = (corona_trace(a), corona_trace(c));
    !(ta.left && tc.left) && !(ta.right && tc.right)
}

fn distance_to(a: i64, c: &EpSet) -> u64 {
    (0u64..)
        .find(|&d| c.contains(a - d as i64) || c.contains(a + d as i64))
        .expect("distance to a nonempty set")
}

/// `sup_{a ∈ A} d(a, C)`, the least `r` with `A ⊆ B(C, r)`; `None` when
/// infinite.
pub fn directed_distance(a: &EpSet, c: &EpSet) -> Option<u64> {
    if a.is_empty() {
        return Some(0);
    }
    if c.is_empty() || !Sides::of(a).is_subset(Sides::of(c)) {
        return None;
    }
    // past these bounds both membership in A and d(·, C) are periodic
    let pc = c.period();
    let span = a.period().lcm(&pc);
    let lo = a.left_threshold().min(c.left_threshold() - pc) - span;
    let hi = a.right_threshold().max(c.right_threshold() + pc) + span;
    Some(
        (lo..hi)
            .filter(|&n| a.contains(n))
            .map(|n| distance_to(n, c))
            .max()
            .unwrap_or(0),
    )
}

/// Hausdorff distance; `None` when infinite or exactly one set is empty.
pub fn hausdorff_distance(a: &EpSet, c: &EpSet) -> Option<u64> {
    if a.is_empty() && c.is_empty() {
        return Some(0);
    }
    if a.is_empty() || c.is_empty() {
        return None;
    }
    Some(directed_distance(a, c)?.max(directed_distance(c, a)?))
}

/// `A` is parallel to `C`: every subset of `A` orthogonal to `C` is bounded.
///
/// For the metric relation this is direction containment.
pub fn parallel_sets(a: &EpSet, c: &EpSet) -> bool {
    is_bounded(a) || Sides::of(a).is_subset(Sides::of(c))
}

#[cfg(test)]
mod tests {
    use super::super::Direction;
    use super::*;

    fn evens() -> EpSet {
        EpSet::progression(0, 2, Direction::Both)
    }

    fn odds() -> EpSet {
        EpSet::progression(1, 2, Direction::Both)
    }

    #[test]
    fn metric_rule_examples() {
        assert!(ls_orth_metric(
            &EpSet::naturals(),
            &EpSet::negative_naturals()
        ));
        let en = EpSet::progression(0, 2, Direction::Right);
        let on = EpSet::progression(1, 2, Direction::Right);
        assert!(!ls_orth_metric(&en, &on));
        assert!(ls_orth_metric(&EpSet::finite([1, 5]), &EpSet::all()));
    }

    #[test]
    fn set_theoretic_examples() {
        assert!(ls_orth_settheoretic(&evens(), &odds()));
        assert!(!ls_orth_settheoretic(
            &EpSet::naturals(),
            &EpSet::progression(0, 2, Direction::Right)
        ));
        assert!(ls_orth_settheoretic(&EpSet::finite([3]), &EpSet::all()));
    }

    #[test]
    fn group_examples() {
        let d = group_orth(&EpSet::naturals(), &EpSet::negative_naturals(), 16);
        assert!(d.orthogonal && d.agrees_with_metric);
        let d = group_orth(&evens(), &odds(), 16);
        assert!(!d.orthogonal);
        assert_eq!(d.witness_k, Some(1));
        assert!(group_orth(&EpSet::empty(), &EpSet::all(), 16).orthogonal);
    }

    #[test]
    fn group_cap_below_period_falls_back_to_metric() {
        let a = EpSet::progression(0, 8, Direction::Right);
        let c = EpSet::progression(4, 8, Direction::Right);
        let d = group_orth(&a, &c, 1);
        assert!(d.decided_by_metric);
        assert!(!d.orthogonal);
        let full = group_orth(&a, &c, 16);
        assert_eq!(full.witness_k, Some(2));
    }

    #[test]
    fn simple_end_examples() {
        let two = EpSet::progression(0, 2, Direction::Right);
        let three = EpSet::progression(0, 3, Direction::Right);
        let (x, y) = parallel_ends(&two, &three).unwrap();
        assert_eq!(
            (x, y),
            (
                AffineEnd {
                    intercept: 0,
                    slope: 6
                },
                AffineEnd {
                    intercept: 0,
                    slope: 6
                }
            )
        );
        assert!(x.lies_in(&two) && y.lies_in(&three));
        assert!(simple_ends_orth(
            &EpSet::naturals(),
            &EpSet::negative_naturals()
        ));
        assert!(simple_ends_orth(&EpSet::finite([0, 1]), &EpSet::all()));
        assert!(AffineEnd::new(3, 0).is_none());
    }

    #[test]
    fn shift_reparameterization_preserves_parallelism() {
        let x = AffineEnd {
            intercept: 1,
            slope: 4,
        };
        let y = AffineEnd {
            intercept: -7,
            slope: 4,
        };
        let z = AffineEnd {
            intercept: 0,
            slope: -4,
        };
        for k in 0..10 {
            assert!(x.shifted(k).is_parallel(&y.shifted(k)));
            assert!(!x.shifted(k).is_parallel(&z.shifted(k)));
            assert!(x.shifted(k).drift(&y.shifted(k), 100) == 8);
        }
    }

    #[test]
    fn corona_examples() {
        assert!(ends_compactification_orth(
            &EpSet::naturals(),
            &EpSet::negative_naturals()
        ));
        assert!(!ends_compactification_orth(&evens(), &odds()));
        assert!(ends_compactification_orth(
            &EpSet::finite([2]),
            &EpSet::all()
        ));
    }

    #[test]
    fn distances() {
        assert_eq!(hausdorff_distance(&evens(), &odds()), Some(1));
        assert_eq!(hausdorff_distance(&EpSet::naturals(), &EpSet::all()), None);
        assert_eq!(
            directed_distance(
                &EpSet::naturals(),
                &EpSet::progression(0, 5, Direction::Right)
            ),
            Some(2)
        );
        assert_eq!(
            directed_distance(&EpSet::finite([10]), &EpSet::finite([0])),
            Some(10)
        );
        assert_eq!(
            directed_distance(&EpSet::finite([1]), &EpSet::empty()),
            None
        );
    }

    #[test]
    fn parallel_set_examples() {
        assert!(parallel_sets(
            &EpSet::progression(0, 3, Direction::Right),
            &EpSet::naturals()
        ));
        assert!(!parallel_sets(&EpSet::all(), &EpSet::naturals()));
        assert!(parallel_sets(&EpSet::finite([4]), &EpSet::empty()));
    }
}
