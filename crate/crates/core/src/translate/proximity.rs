//! Proximities and normal small-scale relations.

use crate::relation::{separation_profile, FiniteRelation, OrthTable, ScaleClass};
use crate::set::{all_subsets, GroundSet, PointSet};
use crate::{Budget, Error, Result};

/// A nearness relation `A δ C` on the subsets of a finite set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proximity {
    ground: GroundSet,
    near: OrthTable,
}

/// First failure of one of the five proximity axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProximityViolation {
    /// 1: symmetry, 2: `A δ B ⟹ A ≠ ∅`, 3: `A ∩ B ≠ ∅ ⟹ A δ B`,
    /// 4: `A δ (B ∪ C) ⟺ A δ B or A δ C`,
    /// 5: `(∀E: A δ E or B δ (X ∖ E)) ⟹ A δ B`.
    pub axiom: u8,
    pub witness: Vec<PointSet>,
}

impl Proximity {
    /// Tabulates `near` without checking any axiom.
    pub fn from_fn(
        ground: GroundSet,
        near: impl FnMut(PointSet, PointSet) -> bool,
    ) -> Result<Proximity> {
        let near = OrthTable::from_fn(ground.len(), near)?;
        Ok(Proximity { ground, near })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn near(&self, a: PointSet, c: PointSet) -> bool {
        self.near.get(a, c)
    }

    /// Changes one ordered pair; used to build malformed proximities.
    pub fn set_near(&mut self, a: PointSet, c: PointSet, value: bool) {
        self.near.set(a, c, value);
    }

    /// Checks axioms 1–5 in order, exhausting `E` for axiom 5.
    pub fn check_axioms(&self) -> Option<ProximityViolation> {
        let n = self.n();
        let full = self.ground.full();
        let v = |axiom, witness: Vec<PointSet>| Some(ProximityViolation { axiom, witness });
        for a in all_subsets(n) {
            for b in all_subsets(n) {
                if self.near(a, b) != self.near(b, a) {
                    return v(1, vec![a, b]);
                }
            }
        }
        for a in all_subsets(n) {
            for b in all_subsets(n) {
                if self.near(a, b) && a.is_empty() {
                    return v(2, vec![a, b]);
                }
            }
        }
        for a in all_subsets(n) {
            for b in all_subsets(n) {
                if a.intersects(b) && !self.near(a, b) {
                    return v(3, vec![a, b]);
                }
            }
        }
        for a in all_subsets(n) {
            for b in all_subsets(n) {
                for c in all_subsets(n) {
                    if self.near(a, b | c) != (self.near(a, b) || self.near(a, c)) {
                        return v(4, vec![a, b, c]);
                    }
                }
            }
        }
        for a in all_subsets(n) {
            for b in all_subsets(n) {
                if self.near(a, b) {
                    continue;
                }
                if all_subsets(n).all(|e| self.near(a, e) || self.near(b, full - e)) {
                    return v(5, vec![a, b]);
                }
            }
        }
        None
    }
}

fn describe(ground: &GroundSet, sets: &[PointSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|&s| ground.format(s)).collect();
    parts.join(", ")
}

/// `A δ C ⟺ ¬(A ⊥ C)`, for normal small-scale relations.
pub fn orth_to_proximity(rel: &FiniteRelation, budget: &Budget) -> Result<Proximity> {
    if rel.scale_class() != ScaleClass::Small {
        let b = rel.self_orthogonal_points();
        return Err(Error::pre(format!(
            "relation is not small scale: {} is self-orthogonal",
            rel.ground().format(b)
        )));
    }
    if let Some(f) = separation_profile(rel, budget)?.normal.counterexample {
        return Err(Error::pre(format!("relation is not normal: {f:?}")));
    }
    Proximity::from_fn(rel.ground().clone(), |a, c| !rel.orth(a, c))
}

/// `A ⊥ C ⟺ ¬(A δ C)`, for proximities passing all five axioms.
pub fn proximity_to_orth(p: &Proximity) -> Result<FiniteRelation> {
    if let Some(v) = p.check_axioms() {
        return Err(Error::pre(format!(
            "proximity axiom {} fails at ({})",
            v.axiom,
            describe(p.ground(), &v.witness)
        )));
    }
    let table = OrthTable::from_fn(p.n(), |a, c| !p.near(a, c))?;
    FiniteRelation::explicit(p.ground().clone(), "proximity", table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::FiniteMetric;

    #[test]
    fn metric_proximity_is_intersection() {
        let rel = FiniteMetric::on_line(&[0.0, 1.0, 3.0]).unwrap().relation();
        let p = orth_to_proximity(&rel, &Budget::default()).unwrap();
        for a in all_subsets(3) {
            for c in all_subsets(3) {
                assert_eq!(p.near(a, c), a.intersects(c));
            }
        }
        assert_eq!(p.check_axioms(), None);
        let back = proximity_to_orth(&p).unwrap();
        assert!(back.same_answers(&rel).unwrap());
    }

    #[test]
    fn large_scale_input_is_rejected() {
        let rel = FiniteRelation::total(GroundSet::indexed(2));
        assert!(orth_to_proximity(&rel, &Budget::default()).is_err());
    }

    #[test]
    fn each_axiom_failure_is_detected() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(3));
        let good = orth_to_proximity(&rel, &Budget::default()).unwrap();
        let (x, y) = (PointSet(0b001), PointSet(0b010));

        let mut p = good.clone();
        p.set_near(x, y, true);
        assert_eq!(p.check_axioms().unwrap().axiom, 1);

        let mut p = good.clone();
        p.set_near(PointSet::EMPTY, x, true);
        p.set_near(x, PointSet::EMPTY, true);
        assert_eq!(p.check_axioms().unwrap().axiom, 2);

        let mut p = good.clone();
        p.set_near(x, x, false);
        assert_eq!(p.check_axioms().unwrap().axiom, 3);

        let mut p = good.clone();
        p.set_near(x, PointSet(0b110), true);
        p.set_near(PointSet(0b110), x, true);
        assert_eq!(p.check_axioms().unwrap().axiom, 4);
        assert!(proximity_to_orth(&p).is_err());

        // x0 ⊥ x1 while x2 is near both: additive, but X = E ∪ (X ∖ E)
        // always puts x2 next to one of them
        let unspanned =
            FiniteRelation::from_pair_fn(GroundSet::indexed(3), "u", |a, b| (a, b) == (0, 1));
        let p = Proximity::from_fn(GroundSet::indexed(3), |a, c| !unspanned.orth(a, c)).unwrap();
        assert_eq!(p.check_axioms().unwrap().axiom, 5);
    }
}
