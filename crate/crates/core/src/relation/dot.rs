//! Dot products and their correspondence with orthogonality relations.

use super::{FiniteRelation, OrthTable};
use crate::set::{all_subsets, GroundSet, PointSet};
use crate::{Error, Result};

/// A symmetric, bilinear set-valued product on the subsets of a finite set:
/// `∅ · X = ∅` and `C · (D ∪ E) = (C · D) ∪ (C · E)`.
///
/// Values are masks over the product's own value set, which need not be the
/// ground set.
pub trait DotProduct {
    fn points(&self) -> usize;
    fn dot(&self, c: PointSet, d: PointSet) -> PointSet;
}

/// `C · D = C ∩ D`.
#[derive(Debug, Clone, Copy)]
pub struct IntersectionDot {
    pub n: usize,
}

impl DotProduct for IntersectionDot {
    fn points(&self) -> usize {
        self.n
    }

    fn dot(&self, c: PointSet, d: PointSet) -> PointSet {
        c & d
    }
}

/// Two-valued product: `∅` on orthogonal pairs and `X` otherwise.
#[derive(Debug, Clone)]
pub struct BasicDot {
    rel: FiniteRelation,
}

impl BasicDot {
    pub fn relation(&self) -> &FiniteRelation {
        &self.rel
    }
}

impl DotProduct for BasicDot {
    fn points(&self) -> usize {
        self.rel.n()
    }

    fn dot(&self, c: PointSet, d: PointSet) -> PointSet {
        if self.rel.orth(c, d) {
            PointSet::EMPTY
        } else {
            self.rel.full()
        }
    }
}

/// The basic dot product of a relation.
pub fn dot_duality(rel: &FiniteRelation) -> BasicDot {
    BasicDot { rel: rel.clone() }
}

/// `C ⊥ D ⟺ C · D = ∅`, tabulated explicitly.
pub fn from_dot(
    dot: &impl DotProduct,
    ground: GroundSet,
    provenance: &str,
) -> Result<FiniteRelation> {
    if ground.len() != dot.points() {
        return Err(Error::GroundSizeMismatch {
            left: ground.len(),
            right: dot.points(),
        });
    }
    let table = OrthTable::from_fn(dot.points(), |c, d| dot.dot(c, d).is_empty())?;
    FiniteRelation::explicit_raw(ground, provenance, table)
}

/// Replaces every nonempty value by the whole set `X` of `n` points.
pub fn reduce_to_basic(dot: &impl DotProduct, n: usize) -> impl DotProduct + '_ {
    struct Reduced<'a, D> {
        inner: &'a D,
        n: usize,
    }
    impl<D: DotProduct> DotProduct for Reduced<'_, D> {
        fn points(&self) -> usize {
            self.inner.points()
        }
        fn dot(&self, c: PointSet, d: PointSet) -> PointSet {
            if self.inner.dot(c, d).is_empty() {
                PointSet::EMPTY
            } else {
                PointSet::full(self.n)
            }
        }
    }
    Reduced { inner: dot, n }
}

/// First failure of symmetry, `∅ · X = ∅` or bilinearity, as a list of the
/// subsets involved; `None` when the product is valid.
pub fn check_dot_axioms(dot: &impl DotProduct) -> Result<Option<Vec<PointSet>>> {
    let n = dot.points();
    if n > super::MAX_TABLE_POINTS {
        return Err(Error::budget(
            "dot product points",
            n,
            super::MAX_TABLE_POINTS,
        ));
    }
    let full = PointSet::full(n);
    if !dot.dot(PointSet::EMPTY, full).is_empty() {
        return Ok(Some(vec![PointSet::EMPTY, full]));
    }
    for c in all_subsets(n) {
        for d in all_subsets(n) {
            if dot.dot(c, d) != dot.dot(d, c) {
                return Ok(Some(vec![c, d]));
            }
            for e in all_subsets(n) {
                if dot.dot(c, d | e) != (dot.dot(c, d) | dot.dot(c, e)) {
                    return Ok(Some(vec![c, d, e]));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_product_gives_disjointness() {
        let g = GroundSet::indexed(3);
        let rel = from_dot(&IntersectionDot { n: 3 }, g.clone(), "dot").unwrap();
        assert!(rel.same_answers(&FiniteRelation::disjointness(g)).unwrap());
        assert_eq!(check_dot_axioms(&IntersectionDot { n: 3 }).unwrap(), None);
    }

    #[test]
    fn basic_reduction_keeps_orthogonality() {
        let dot = IntersectionDot { n: 3 };
        let basic = reduce_to_basic(&dot, 3);
        assert_eq!(check_dot_axioms(&basic).unwrap(), None);
        let a = from_dot(&dot, GroundSet::indexed(3), "a").unwrap();
        let b = from_dot(&basic, GroundSet::indexed(3), "b").unwrap();
        assert!(a.same_answers(&b).unwrap());
    }

    #[test]
    fn round_trip_through_basic_dot() {
        let rel = FiniteRelation::from_pair_fn(GroundSet::indexed(4), "r", |x, y| x % 2 != y % 2);
        let back = from_dot(&dot_duality(&rel), rel.ground().clone(), "back").unwrap();
        assert!(back.same_answers(&rel).unwrap());
    }
}
