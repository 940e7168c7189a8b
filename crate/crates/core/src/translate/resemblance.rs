//! Asymptotic resemblances and the orthogonality they induce.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::line::{hausdorff_distance, EpSet};
use crate::relation::{FiniteRelation, OrthTable};
use crate::set::{all_subsets, GroundSet, PointSet};
use crate::{Budget, Error, Result};

/// Which resemblance condition fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResemblanceAxiom {
    Reflexive,
    Symmetric,
    Transitive,
    /// `A₁ λ B₁, A₂ λ B₂ ⟹ (A₁ ∪ A₂) λ (B₁ ∪ B₂)`.
    Union,
    /// `A λ (B₁ ∪ B₂)` with `B₁, B₂ ≠ ∅` splits `A` into nonempty
    /// `A₁ λ B₁`, `A₂ λ B₂`.
    Splitting,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResemblanceViolation<S> {
    pub axiom: ResemblanceAxiom,
    pub witness: Vec<S>,
}

type FiniteLambda = Arc<dyn Fn(PointSet, PointSet) -> bool + Send + Sync>;

/// A resemblance on the subsets of a finite set, given as a pair classifier.
#[derive(Clone)]
pub struct FiniteResemblance {
    ground: GroundSet,
    name: String,
    lambda: FiniteLambda,
}

impl std::fmt::Debug for FiniteResemblance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteResemblance({}, {} points)",
            self.name,
            self.ground.len()
        )
    }
}

impl FiniteResemblance {
    pub fn new(
        ground: GroundSet,
        name: impl Into<String>,
        lambda: impl Fn(PointSet, PointSet) -> bool + Send + Sync + 'static,
    ) -> FiniteResemblance {
        FiniteResemblance {
            ground,
            name: name.into(),
            lambda: Arc::new(lambda),
        }
    }

    /// Every two nonempty sets resemble each other; `∅` only itself.
    pub fn nonempty(ground: GroundSet) -> FiniteResemblance {
        FiniteResemblance::new(ground, "nonempty", |a, c| a.is_empty() == c.is_empty())
    }

    /// Every two sets resemble each other.
    pub fn total(ground: GroundSet) -> FiniteResemblance {
        FiniteResemblance::new(ground, "total", |_, _| true)
    }

    pub fn equality(ground: GroundSet) -> FiniteResemblance {
        FiniteResemblance::new(ground, "equality", |a, c| a == c)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn resembles(&self, a: PointSet, c: PointSet) -> bool {
        (self.lambda)(a, c)
    }

    /// Two points that do not resemble each other.
    pub fn hypothesis_failure(&self) -> Option<(usize, usize)> {
        let n = self.ground.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| !self.resembles(PointSet::singleton(x), PointSet::singleton(y)))
    }

    /// Exhaustive check of the equivalence and resemblance axioms.
    pub fn check_axioms(&self, budget: &Budget) -> Result<Option<ResemblanceViolation<PointSet>>> {
        let n = self.ground.len();
        budget.require("resemblance points", n, budget.triple_n)?;
        let sets: Vec<PointSet> = all_subsets(n).collect();
        let m = sets.len();
        let table: Vec<bool> = sets
            .iter()
            .flat_map(|&a| sets.iter().map(move |&c| (a, c)))
            .map(|(a, c)| self.resembles(a, c))
            .collect();
        let lam = |a: PointSet, c: PointSet| table[a.bits() as usize * m + c.bits() as usize];
        let v = |axiom, witness| Ok(Some(ResemblanceViolation { axiom, witness }));
        for &a in &sets {
            if !lam(a, a) {
                return v(ResemblanceAxiom::Reflexive, vec![a]);
            }
        }
        for &a in &sets {
            for &c in &sets {
                if lam(a, c) != lam(c, a) {
                    return v(ResemblanceAxiom::Symmetric, vec![a, c]);
                }
            }
        }
        for &a in &sets {
            for &b in &sets {
                if !lam(a, b) {
                    continue;
                }
                for &c in &sets {
                    if lam(b, c) && !lam(a, c) {
                        return v(ResemblanceAxiom::Transitive, vec![a, b, c]);
                    }
                }
            }
        }
        let pairs: Vec<(PointSet, PointSet)> = sets
            .iter()
            .flat_map(|&a| sets.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| lam(a, b))
            .collect();
        for &(a1, b1) in &pairs {
            for &(a2, b2) in &pairs {
                if !lam(a1 | a2, b1 | b2) {
                    return v(ResemblanceAxiom::Union, vec![a1, b1, a2, b2]);
                }
            }
        }
        for &a in &sets {
            for &b1 in &sets[1..] {
                for &b2 in &sets[1..] {
                    if !lam(a, b1 | b2) {
                        continue;
                    }
                    let splits = a.subsets().any(|a1| {
                        !a1.is_empty()
                            && lam(a1, b1)
                            && a.subsets()
                                .any(|a2| !a2.is_empty() && a1 | a2 == a && lam(a2, b2))
                    });
                    if !splits {
                        return v(ResemblanceAxiom::Splitting, vec![a, b1, b2]);
                    }
                }
            }
        }
        Ok(None)
    }
}

/// The three-step construction, evaluated literally:
/// `A ≤ C ⟺ C λ (A ∪ C)`; `B` bounded iff `B ≤ A` for every nonempty `A`;
/// `A ⊥ C` iff every `B` with `B ≤ A` and `B ≤ C` is bounded.
pub fn resemblance_to_orth(lam: &FiniteResemblance, budget: &Budget) -> Result<FiniteRelation> {
    let n = lam.ground().len();
    budget.require("resemblance points", n, budget.triple_n)?;
    if let Some((x, y)) = lam.hypothesis_failure() {
        return Err(Error::pre(format!(
            "points {} and {} do not resemble each other",
            lam.ground().name(x),
            lam.ground().name(y)
        )));
    }
    let sets: Vec<PointSet> = all_subsets(n).collect();
    let m = sets.len();
    let mut le = vec![false; m * m];
    for &a in &sets {
        for &c in &sets {
            le[a.bits() as usize * m + c.bits() as usize] = lam.resembles(c, a | c);
        }
    }
    let le = |a: PointSet, c: PointSet| le[a.bits() as usize * m + c.bits() as usize];
    let bounded: Vec<bool> = sets
        .iter()
        .map(|&b| sets[1..].iter().all(|&a| le(b, a)))
        .collect();
    let table = OrthTable::from_fn(n, |a, c| {
        sets.iter()
            .all(|&b| !(le(b, a) && le(b, c)) || bounded[b.bits() as usize])
    })?;
    FiniteRelation::explicit_raw(
        lam.ground().clone(),
        format!("resemblance {}", lam.name()),
        table,
    )
}

type LineLambda = Arc<dyn Fn(&EpSet, &EpSet) -> bool + Send + Sync>;

/// A resemblance on eventually periodic subsets of ℤ.
#[derive(Clone)]
pub struct LineResemblance {
    name: String,
    lambda: LineLambda,
}

impl std::fmt::Debug for LineResemblance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LineResemblance({})", self.name)
    }
}

impl LineResemblance {
    pub fn new(
        name: impl Into<String>,
        lambda: impl Fn(&EpSet, &EpSet) -> bool + Send + Sync + 'static,
    ) -> LineResemblance {
        LineResemblance {
            name: name.into(),
            lambda: Arc::new(lambda),
        }
    }

    /// `A λ C` iff the Hausdorff distance is finite.
    pub fn hausdorff() -> LineResemblance {
        LineResemblance::new("finite hausdorff distance", |a, c| {
            hausdorff_distance(a, c).is_some()
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn resembles(&self, a: &EpSet, c: &EpSet) -> bool {
        (self.lambda)(a, c)
    }

    /// Checks `{x} λ {y}` on the given points.
    pub fn hypothesis_failure(&self, points: &[i64]) -> Option<(i64, i64)> {
        points
            .iter()
            .flat_map(|&x| points.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| !self.resembles(&EpSet::finite([x]), &EpSet::finite([y])))
    }

    /// `A ≤ C ⟺ C λ (A ∪ C)`.
    pub fn le(&self, a: &EpSet, c: &EpSet) -> bool {
        self.resembles(c, &a.union(c))
    }

    /// `B ≤ A` for every nonempty `A` of a family containing a singleton,
    /// both half-lines and ℤ.
    pub fn is_bounded(&self, b: &EpSet) -> bool {
        [
            EpSet::finite([0]),
            EpSet::naturals(),
            EpSet::negative_naturals(),
            EpSet::all(),
        ]
        .iter()
        .all(|a| self.le(b, a))
    }

    /// Candidate sets `B` below both `A` and `C`: the sets themselves, their
    /// intersection and `A ∩ B(C, r)`, `C ∩ B(A, r)` for `r` up to the
    /// larger period, past which the dilations fill whole tails.
    pub fn common_lower_candidates(a: &EpSet, c: &EpSet) -> Vec<EpSet> {
        let top = a.period().max(c.period()) as u64;
        let mut out = vec![a.clone(), c.clone(), a.intersection(c)];
        for r in 0..=top {
            out.push(a.intersection(&c.dilate(r)));
            out.push(c.intersection(&a.dilate(r)));
        }
        out.sort();
        out.dedup();
        out
    }

    /// `A ⊥ C` iff every candidate `B` with `B ≤ A` and `B ≤ C` is bounded.
    pub fn orth(&self, a: &EpSet, c: &EpSet) -> bool {
        LineResemblance::common_lower_candidates(a, c)
            .iter()
            .all(|b| !(self.le(b, a) && self.le(b, c)) || self.is_bounded(b))
    }

    /// Equivalence and resemblance axioms on `samples` random choices from
    /// `pool`; splitting uses the candidates `A ∩ B(Bᵢ, r)`.
    pub fn check_axioms_sampled(
        &self,
        pool: &[EpSet],
        samples: usize,
        seed: u64,
    ) -> Option<ResemblanceViolation<EpSet>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = |axiom, witness: Vec<&EpSet>| {
            Some(ResemblanceViolation {
                axiom,
                witness: witness.into_iter().cloned().collect(),
            })
        };
        for _ in 0..samples {
            let pick = |rng: &mut ChaCha8Rng| pool.choose(rng).expect("nonempty pool");
            let (a, b, c, d) = (
                pick(&mut rng),
                pick(&mut rng),
                pick(&mut rng),
                pick(&mut rng),
            );
            if !self.resembles(a, a) {
                return v(ResemblanceAxiom::Reflexive, vec![a]);
            }
            if self.resembles(a, b) != self.resembles(b, a) {
                return v(ResemblanceAxiom::Symmetric, vec![a, b]);
            }
            if self.resembles(a, b) && self.resembles(b, c) && !self.resembles(a, c) {
                return v(ResemblanceAxiom::Transitive, vec![a, b, c]);
            }
            if self.resembles(a, b)
                && self.resembles(c, d)
                && !self.resembles(&a.union(c), &b.union(d))
            {
                return v(ResemblanceAxiom::Union, vec![a, b, c, d]);
            }
            if !b.is_empty()
                && !c.is_empty()
                && self.resembles(a, &b.union(c))
                && !self.splits(a, b, c)
            {
                return v(ResemblanceAxiom::Splitting, vec![a, b, c]);
            }
        }
        None
    }

    fn splits(&self, a: &EpSet, b1: &EpSet, b2: &EpSet) -> bool {
        let reach = hausdorff_distance(a, &b1.union(b2))
            .unwrap_or(64)
            .max(a.period() as u64);
        (0..=reach).any(|r| {
            let a1 = a.intersection(&b1.dilate(r));
            let a2 = a.intersection(&b2.dilate(r));
            !a1.is_empty()
                && !a2.is_empty()
                && a1.union(&a2) == *a
                && self.resembles(&a1, b1)
                && self.resembles(&a2, b2)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line::{ls_orth_metric, Direction};
    use crate::relation::verify_finite_axioms;

    #[test]
    fn nonempty_resemblance_gives_total_orthogonality() {
        let b = Budget::default();
        let g = GroundSet::indexed(3);
        let lam = FiniteResemblance::nonempty(g.clone());
        assert_eq!(lam.check_axioms(&b).unwrap(), None);
        let rel = resemblance_to_orth(&lam, &b).unwrap();
        assert!(rel.same_answers(&FiniteRelation::total(g.clone())).unwrap());
        assert!(verify_finite_axioms(&rel, &b).unwrap().passed);
    }

    #[test]
    fn total_resemblance_cannot_split_the_empty_set() {
        let lam = FiniteResemblance::total(GroundSet::indexed(2));
        let v = lam.check_axioms(&Budget::default()).unwrap().unwrap();
        assert_eq!(v.axiom, ResemblanceAxiom::Splitting);
        assert!(v.witness[0].is_empty());
    }

    #[test]
    fn equality_fails_the_hypothesis() {
        let lam = FiniteResemblance::equality(GroundSet::indexed(2));
        assert_eq!(lam.hypothesis_failure(), Some((0, 1)));
        assert!(resemblance_to_orth(&lam, &Budget::default()).is_err());
    }

    #[test]
    fn broken_union_axiom_is_found() {
        // sets of equal size resemble each other
        let lam = FiniteResemblance::new(GroundSet::indexed(3), "size", |a, c| a.len() == c.len());
        let v = lam.check_axioms(&Budget::default()).unwrap().unwrap();
        assert_eq!(v.axiom, ResemblanceAxiom::Union);
    }

    #[test]
    fn hausdorff_resemblance_matches_metric_orthogonality() {
        let lam = LineResemblance::hausdorff();
        assert_eq!(lam.hypothesis_failure(&[-3, 0, 5]), None);
        let sets = [
            EpSet::naturals(),
            EpSet::negative_naturals(),
            EpSet::progression(1, 2, Direction::Right),
            EpSet::progression(0, 3, Direction::Both),
            EpSet::finite([2, 9]),
            EpSet::empty(),
            EpSet::all(),
        ];
        for a in &sets {
            for c in &sets {
                assert_eq!(lam.orth(a, c), ls_orth_metric(a, c), "{a} vs {c}");
            }
        }
        assert!(lam.is_bounded(&EpSet::finite([4, 40])));
        assert!(!lam.is_bounded(&EpSet::naturals()));
        assert_eq!(lam.check_axioms_sampled(&sets, 500, 3), None);
    }
}
