//! Neighborhood operators and their correspondence with orthogonality.

use crate::relation::{FiniteRelation, OrthTable};
use crate::set::{all_subsets, expand, GroundSet, PointSet};
use crate::{Budget, Error, Result};

/// The neighborhood-operator axioms, primed ones being consequences of the
/// first four, and the normality condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NbhdAxiom {
    /// `A ≺ X`.
    N0,
    /// `A ≺ B ⟹ X ∖ B ≺ X ∖ A`.
    N1,
    /// `A ≺ B ⊆ C ⟹ A ≺ C`.
    N2,
    /// `A ≺ N, A' ≺ N' ⟹ A ∪ A' ≺ N ∪ N'`.
    N3,
    /// `∅ ≺ A`.
    N0Prime,
    /// `A ⊆ B ≺ C ⟹ A ≺ C`.
    N2Prime,
    /// `A ≺ N, A' ≺ N' ⟹ A ∩ A' ≺ N ∩ N'`.
    N3Prime,
    /// `A ≺ C ⟹ A ≺ B ≺ C` for some `B`.
    N4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NbhdViolation {
    pub axiom: NbhdAxiom,
    pub witness: Vec<PointSet>,
}

/// A relation `A ≺ U` between subsets of a finite set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodOperator {
    ground: GroundSet,
    prec: OrthTable,
}

impl NeighborhoodOperator {
    /// Tabulates `prec` without checking any axiom.
    pub fn from_fn(
        ground: GroundSet,
        prec: impl FnMut(PointSet, PointSet) -> bool,
    ) -> Result<NeighborhoodOperator> {
        let prec = OrthTable::from_fn(ground.len(), prec)?;
        Ok(NeighborhoodOperator { ground, prec })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn prec(&self, a: PointSet, u: PointSet) -> bool {
        self.prec.get(a, u)
    }

    pub fn set_prec(&mut self, a: PointSet, u: PointSet, value: bool) {
        self.prec.set(a, u, value);
    }

    fn pairs(&self) -> Vec<(PointSet, PointSet)> {
        let n = self.n();
        all_subsets(n)
            .flat_map(|a| all_subsets(n).map(move |u| (a, u)))
            .filter(|&(a, u)| self.prec(a, u))
            .collect()
    }

    fn check(&self, axiom: NbhdAxiom) -> Option<Vec<PointSet>> {
        let n = self.n();
        let full = self.ground.full();
        match axiom {
            NbhdAxiom::N0 => all_subsets(n)
                .find(|&a| !self.prec(a, full))
                .map(|a| vec![a]),
            NbhdAxiom::N0Prime => all_subsets(n)
                .find(|&a| !self.prec(PointSet::EMPTY, a))
                .map(|a| vec![a]),
            NbhdAxiom::N1 => self
                .pairs()
                .into_iter()
                .find(|&(a, b)| !self.prec(full - b, full - a))
                .map(|(a, b)| vec![a, b]),
            NbhdAxiom::N2 => self.pairs().into_iter().find_map(|(a, b)| {
                all_subsets(n)
                    .find(|&c| b.is_subset(c) && !self.prec(a, c))
                    .map(|c| vec![a, b, c])
            }),
            NbhdAxiom::N2Prime => self.pairs().into_iter().find_map(|(b, c)| {
                b.subsets()
                    .find(|&a| !self.prec(a, c))
                    .map(|a| vec![a, b, c])
            }),
            NbhdAxiom::N3 | NbhdAxiom::N3Prime => {
                let pairs = self.pairs();
                for &(a, m) in &pairs {
                    for &(a2, m2) in &pairs {
                        let ok = if axiom == NbhdAxiom::N3 {
                            self.prec(a | a2, m | m2)
                        } else {
                            self.prec(a & a2, m & m2)
                        };
                        if !ok {
                            return Some(vec![a, m, a2, m2]);
                        }
                    }
                }
                None
            }
            NbhdAxiom::N4 => self.pairs().into_iter().find_map(|(a, c)| {
                let interpolates = all_subsets(n).any(|b| self.prec(a, b) && self.prec(b, c));
                (!interpolates).then(|| vec![a, c])
            }),
        }
    }

    /// First violation of (N0)–(N3).
    pub fn check_axioms(&self) -> Option<NbhdViolation> {
        [NbhdAxiom::N0, NbhdAxiom::N1, NbhdAxiom::N2, NbhdAxiom::N3]
            .into_iter()
            .find_map(|axiom| {
                self.check(axiom)
                    .map(|witness| NbhdViolation { axiom, witness })
            })
    }

    /// First violation of (N0′), (N2′), (N3′).
    pub fn check_derived(&self) -> Option<NbhdViolation> {
        [NbhdAxiom::N0Prime, NbhdAxiom::N2Prime, NbhdAxiom::N3Prime]
            .into_iter()
            .find_map(|axiom| {
                self.check(axiom)
                    .map(|witness| NbhdViolation { axiom, witness })
            })
    }

    /// A pair `A ≺ C` with no interpolating `B`, if any.
    pub fn normality_failure(&self) -> Option<(PointSet, PointSet)> {
        self.check(NbhdAxiom::N4).map(|w| (w[0], w[1]))
    }

    pub fn is_normal(&self) -> bool {
        self.normality_failure().is_none()
    }

    /// `S ≺_A T`: `S ≺ T'` for some `T' ⊆ X` with `T = T' ∩ A`; false when
    /// `S` or `T` leaves `A`.
    pub fn sub_relates(&self, a: PointSet, s: PointSet, t: PointSet) -> bool {
        if !s.is_subset(a) || !t.is_subset(a) {
            return false;
        }
        let outside = self.ground.full() - a;
        outside.subsets().any(|extra| self.prec(s, t | extra))
    }
}

/// `A ≺ U ⟺ A ⊥ X ∖ U and A ⊆ U`.
pub fn orth_to_nbhd(rel: &FiniteRelation) -> Result<NeighborhoodOperator> {
    let full = rel.full();
    NeighborhoodOperator::from_fn(rel.ground().clone(), |a, u| {
        a.is_subset(u) && rel.orth(a, full - u)
    })
}

/// `A ⊥ U ⟺ A ≺ X ∖ U`, for operators passing (N0)–(N3).
pub fn nbhd_to_orth(op: &NeighborhoodOperator) -> Result<FiniteRelation> {
    if let Some(v) = op.check_axioms() {
        let parts: Vec<String> = v.witness.iter().map(|&s| op.ground().format(s)).collect();
        return Err(Error::pre(format!(
            "{:?} fails at ({})",
            v.axiom,
            parts.join(", ")
        )));
    }
    let full = op.ground().full();
    let table = OrthTable::from_fn(op.n(), |a, u| op.prec(a, full - u))?;
    FiniteRelation::explicit(op.ground().clone(), "neighborhood operator", table)
}

/// The induced operator on the subsets of `A`, over the ground set
/// restricted to `A`.
pub fn sub_operator(op: &NeighborhoodOperator, a: PointSet) -> Result<NeighborhoodOperator> {
    if a.is_empty() {
        return Err(Error::pre("the subspace must be nonempty"));
    }
    a.check_within(op.n())?;
    NeighborhoodOperator::from_fn(op.ground().restrict(a), |s, t| {
        op.sub_relates(a, expand(s, a), expand(t, a))
    })
}

/// `(N4)` holds iff every disjoint orthogonal pair has a spanning
/// decomposition.
pub fn disjoint_pairs_span(rel: &FiniteRelation, budget: &Budget) -> Result<bool> {
    let n = rel.n();
    budget.require("span points", n, budget.exhaustive_n)?;
    for c in all_subsets(n) {
        for d in all_subsets(n) {
            if !c.intersects(d)
                && rel.orth(c, d)
                && crate::relation::span_witness(rel, c, d, budget)?.is_none()
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
