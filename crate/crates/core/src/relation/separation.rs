//! Spanning decompositions and the Fréchet / Hausdorff / regular / normal
//! separation properties.

use super::{FiniteBackend, FiniteRelation};
use crate::set::{all_subsets, PointSet};
use crate::{Budget, Error, Result};

/// Finds `C', D'` with `C' ∪ D' = X`, `C' ⊥ D` and `D' ⊥ C`.
///
/// Pair-generated relations answer in closed form: a decomposition exists
/// iff `N(C) ∩ N(D) = ∅`, and then `(X ∖ N(D), N(D))` is one (disjoint).
/// Tables fall back to [`span_witness_exhaustive`].
pub fn span_witness(
    rel: &FiniteRelation,
    c: PointSet,
    d: PointSet,
    budget: &Budget,
) -> Result<Option<(PointSet, PointSet)>> {
    if !rel.try_orth(c, d)? {
        return Err(Error::NotOrthogonal);
    }
    match rel.backend() {
        FiniteBackend::Pairs(_) => Ok(pair_span(rel, c, d)),
        FiniteBackend::Table(_) => span_witness_exhaustive(rel, c, d, budget),
    }
}

fn pair_span(rel: &FiniteRelation, c: PointSet, d: PointSet) -> Option<(PointSet, PointSet)> {
    let near_c = rel.near(c);
    let near_d = rel.near(d);
    if near_c.intersects(near_d) {
        None
    } else {
        Some((rel.full() - near_d, near_d))
    }
}

/// Enumerates every `C'` and every `D' ⊇ X ∖ C'`, returning the first
/// decomposition in increasing mask order.
pub fn span_witness_exhaustive(
    rel: &FiniteRelation,
    c: PointSet,
    d: PointSet,
    budget: &Budget,
) -> Result<Option<(PointSet, PointSet)>> {
    budget.require("span search points", rel.n(), budget.pair_search_n)?;
    if !rel.try_orth(c, d)? {
        return Err(Error::NotOrthogonal);
    }
    let full = rel.full();
    for c1 in all_subsets(rel.n()) {
        if !rel.orth(c1, d) {
            continue;
        }
        for extra in c1.subsets() {
            let d1 = (full - c1) | extra;
            if rel.orth(d1, c) {
                return Ok(Some((c1, d1)));
            }
        }
    }
    Ok(None)
}

/// Why a separation property fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparationFailure {
    /// Two distinct points whose singletons are not orthogonal.
    PointsNotOrthogonal { x: usize, y: usize },
    /// An orthogonal pair that admits no spanning decomposition.
    NoSpan { c: PointSet, d: PointSet },
    /// A self-orthogonal set that is not bounded.
    UnboundedSelfOrthogonal { b: PointSet },
}

impl SeparationFailure {
    /// Re-evaluates the failure; `true` means it still holds.
    pub fn reproduces(&self, rel: &FiniteRelation, budget: &Budget) -> Result<bool> {
        match *self {
            SeparationFailure::PointsNotOrthogonal { x, y } => {
                Ok(x != y && x < rel.n() && y < rel.n() && !rel.point_orth(x, y))
            }
            SeparationFailure::NoSpan { c, d } => {
                if !rel.try_orth(c, d)? {
                    return Ok(false);
                }
                Ok(span_witness_exhaustive(rel, c, d, budget)?.is_none())
            }
            SeparationFailure::UnboundedSelfOrthogonal { b } => {
                Ok(rel.try_orth(b, b)? && !rel.is_bounded(b))
            }
        }
    }
}

/// Outcome of one separation property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Property {
    pub holds: bool,
    pub counterexample: Option<SeparationFailure>,
}

impl Property {
    fn of(result: Option<SeparationFailure>) -> Property {
        Property {
            holds: result.is_none(),
            counterexample: result,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationProfile {
    pub frechet: Property,
    pub hausdorff: Property,
    pub regular: Property,
    pub normal: Property,
}

struct Spanner<'a> {
    rel: &'a FiniteRelation,
    budget: &'a Budget,
    /// `N({x})` for pair-generated relations.
    near_points: Option<Vec<PointSet>>,
}

impl Spanner<'_> {
    fn near(&self, s: PointSet) -> PointSet {
        match &self.near_points {
            Some(np) => s.iter().fold(PointSet::EMPTY, |acc, x| acc | np[x]),
            None => self.rel.near(s),
        }
    }

    fn spans(&self, c: PointSet, d: PointSet) -> Result<bool> {
        if self.near_points.is_some() {
            Ok(!self.near(c).intersects(self.near(d)))
        } else {
            Ok(span_witness_exhaustive(self.rel, c, d, self.budget)?.is_some())
        }
    }
}

/// Evaluates all four separation properties exhaustively.
pub fn separation_profile(rel: &FiniteRelation, budget: &Budget) -> Result<SeparationProfile> {
    let n = rel.n();
    budget.require("separation points", n, budget.exhaustive_n)?;
    let full = rel.full();
    // for pair-generated relations N(S) is the union of N({s}) over s ∈ S
    let near_points = rel
        .is_pair_generated()
        .then(|| (0..n).map(|x| rel.near(PointSet::singleton(x))).collect());
    let sp = Spanner {
        rel,
        budget,
        near_points,
    };

    let frechet = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| x != y && !rel.point_orth(x, y))
        .map(|(x, y)| SeparationFailure::PointsNotOrthogonal { x, y });

    let mut hausdorff = frechet;
    if hausdorff.is_none() {
        'h: for x in 0..n {
            for y in 0..n {
                let (c, d) = (PointSet::singleton(x), PointSet::singleton(y));
                if x != y && !sp.spans(c, d)? {
                    hausdorff = Some(SeparationFailure::NoSpan { c, d });
                    break 'h;
                }
            }
        }
    }

    let mut regular = frechet;
    if regular.is_none() {
        'r: for x in 0..n {
            let c = PointSet::singleton(x);
            for a in all_subsets(n) {
                if rel.orth(c, a) && !sp.spans(c, a)? {
                    regular = Some(SeparationFailure::NoSpan { c, d: a });
                    break 'r;
                }
            }
        }
    }
    if regular.is_none() {
        regular = (0..n)
            .map(PointSet::singleton)
            .find(|&b| rel.orth(b, b) && !rel.orth(b, full))
            .map(|b| SeparationFailure::UnboundedSelfOrthogonal { b });
    }

    let mut normal = frechet;
    if normal.is_none() {
        'n: for c in all_subsets(n) {
            for d in all_subsets(n) {
                if rel.orth(c, d) && !sp.spans(c, d)? {
                    normal = Some(SeparationFailure::NoSpan { c, d });
                    break 'n;
                }
            }
        }
    }
    if normal.is_none() {
        normal = all_subsets(n)
            .find(|&b| rel.orth(b, b) && !rel.orth(b, full))
            .map(|b| SeparationFailure::UnboundedSelfOrthogonal { b });
    }

    Ok(SeparationProfile {
        frechet: Property::of(frechet),
        hausdorff: Property::of(hausdorff),
        regular: Property::of(regular),
        normal: Property::of(normal),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::GroundSet;

    #[test]
    fn discrete_pair_spans_with_the_sets_themselves() {
        let rel = FiniteRelation::disjointness(GroundSet::new(["x", "y"]).unwrap());
        let w = span_witness(&rel, PointSet(0b01), PointSet(0b10), &Budget::default()).unwrap();
        assert_eq!(w, Some((PointSet(0b01), PointSet(0b10))));
        let p = separation_profile(&rel, &Budget::default()).unwrap();
        assert!(p.frechet.holds && p.hausdorff.holds && p.regular.holds && p.normal.holds);
    }

    #[test]
    fn disjointness_spans_with_complement_of_d() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(5));
        let (c, d) = (PointSet(0b00011), PointSet(0b01100));
        let w = span_witness(&rel, c, d, &Budget::default()).unwrap();
        assert_eq!(w, Some((rel.full() - d, d)));
    }

    #[test]
    fn non_orthogonal_input_is_an_error() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(3));
        assert_eq!(
            span_witness(&rel, PointSet(1), PointSet(1), &Budget::default()),
            Err(Error::NotOrthogonal)
        );
    }

    #[test]
    fn table_without_decomposition() {
        // x0 ⊥ x1 only; x2 is near both
        let pairs =
            FiniteRelation::from_pair_fn(GroundSet::indexed(3), "p", |x, y| (x, y) == (0, 1));
        let table = pairs.to_table().unwrap();
        let rel = FiniteRelation::explicit(GroundSet::indexed(3), "t", table).unwrap();
        let (c, d) = (PointSet(0b001), PointSet(0b010));
        assert!(rel.near(c).intersects(rel.near(d)));
        assert_eq!(span_witness(&rel, c, d, &Budget::default()).unwrap(), None);
        assert_eq!(
            span_witness(&pairs, c, d, &Budget::default()).unwrap(),
            None
        );
    }

    #[test]
    fn sierpinski_relation_is_not_frechet() {
        // closures: cl{a} = X, cl{b} = {b}; no nonempty pair is orthogonal
        let rel =
            FiniteRelation::from_pair_fn(GroundSet::new(["a", "b"]).unwrap(), "s", |_, _| false);
        let p = separation_profile(&rel, &Budget::default()).unwrap();
        assert!(!p.frechet.holds);
        let cx = p.frechet.counterexample.unwrap();
        assert_eq!(cx, SeparationFailure::PointsNotOrthogonal { x: 0, y: 1 });
        assert!(cx.reproduces(&rel, &Budget::default()).unwrap());
    }

    #[test]
    fn fast_path_matches_exhaustive_on_tables() {
        let rel =
            FiniteRelation::from_pair_fn(GroundSet::indexed(4), "p", |x, y| x + y != 3 && x != y);
        let tab =
            FiniteRelation::explicit(GroundSet::indexed(4), "t", rel.to_table().unwrap()).unwrap();
        let b = Budget::default();
        let a = separation_profile(&rel, &b).unwrap();
        let t = separation_profile(&tab, &b).unwrap();
        assert_eq!(a.normal.holds, t.normal.holds);
        assert_eq!(a.regular.holds, t.regular.holds);
        assert_eq!(a.hausdorff.holds, t.hausdorff.holds);
    }
}
