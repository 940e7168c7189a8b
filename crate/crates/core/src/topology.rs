//! Perps, the induced topology, its closed-set variant and the separation
//! constructions built on them.

use std::collections::BTreeSet;

use crate::models::FiniteTopology;
use crate::relation::{separation_profile, span_witness, FiniteRelation, SeparationFailure};
use crate::set::{all_subsets, PointSet};
use crate::{Budget, Error, Result};

/// `A^⊥ = {x ∈ X ∖ A : {x} ⊥ A}`.
pub fn perp(rel: &FiniteRelation, a: PointSet) -> PointSet {
    (rel.full() - a)
        .iter()
        .filter(|&x| rel.orth(PointSet::singleton(x), a))
        .fold(PointSet::EMPTY, PointSet::with)
}

/// `A^⊥` for every `A ⊆ X`, indexed by mask.
pub fn perp_table(rel: &FiniteRelation, budget: &Budget) -> Result<Vec<PointSet>> {
    budget.require("perp table points", rel.n(), budget.exhaustive_n)?;
    Ok(all_subsets(rel.n()).map(|a| perp(rel, a)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyOrigin {
    /// Generated by the perps `A^⊥`.
    PerpBasis,
    /// Complements of the sets `A` with `x ⊥ A` for every `x ∉ A`.
    ClosedSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyView {
    pub n: usize,
    pub basis: Vec<PointSet>,
    /// Sorted by mask.
    pub opens: Vec<PointSet>,
    pub origin: TopologyOrigin,
}

impl TopologyView {
    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1usize << self.n
    }

    pub fn is_indiscrete(&self) -> bool {
        self.opens == [PointSet::EMPTY, PointSet::full(self.n)]
            || (self.n == 0 && self.opens == [PointSet::EMPTY])
    }

    pub fn same_opens(&self, other: &TopologyView) -> bool {
        self.opens == other.opens
    }

    /// Checks the topology axioms and builds the finite topology.
    pub fn to_topology(&self, rel: &FiniteRelation) -> Result<FiniteTopology> {
        FiniteTopology::new(rel.ground().clone(), self.opens.iter().copied())
    }
}

fn union_closure(basis: &[PointSet]) -> Vec<PointSet> {
    let mut opens: BTreeSet<PointSet> = BTreeSet::from([PointSet::EMPTY]);
    for &b in basis {
        let snapshot: Vec<PointSet> = opens.iter().copied().collect();
        for o in snapshot {
            opens.insert(o | b);
        }
    }
    opens.into_iter().collect()
}

/// Basis `{A^⊥ : A ⊆ X} ∪ {∅}` and all unions of basis elements.
pub fn induced_topology(rel: &FiniteRelation, budget: &Budget) -> Result<TopologyView> {
    let perps: BTreeSet<PointSet> = perp_table(rel, budget)?
        .into_iter()
        .chain([PointSet::EMPTY])
        .collect();
    let basis: Vec<PointSet> = perps.into_iter().collect();
    let opens = union_closure(&basis);
    Ok(TopologyView {
        n: rel.n(),
        basis,
        opens,
        origin: TopologyOrigin::PerpBasis,
    })
}

/// `A` is closed iff every point outside `A` is orthogonal to `A`.
pub fn is_perp_closed(rel: &FiniteRelation, a: PointSet) -> bool {
    (rel.full() - a)
        .iter()
        .all(|x| rel.orth(PointSet::singleton(x), a))
}

pub fn closed_variant_topology(rel: &FiniteRelation, budget: &Budget) -> Result<TopologyView> {
    budget.require("closed-set points", rel.n(), budget.exhaustive_n)?;
    let full = rel.full();
    let mut opens: Vec<PointSet> = all_subsets(rel.n())
        .filter(|&a| is_perp_closed(rel, a))
        .map(|a| full - a)
        .collect();
    opens.sort();
    Ok(TopologyView {
        n: rel.n(),
        basis: opens.clone(),
        opens,
        origin: TopologyOrigin::ClosedSet,
    })
}

/// First pair with `C^⊥ ∩ D^⊥ ≠ (C ∪ D)^⊥`.
pub fn perp_intersection_failure(
    rel: &FiniteRelation,
    budget: &Budget,
) -> Result<Option<(PointSet, PointSet)>> {
    let perps = perp_table(rel, budget)?;
    let at = |s: PointSet| perps[s.bits() as usize];
    for c in all_subsets(rel.n()) {
        for d in all_subsets(rel.n()) {
            if at(c) & at(d) != at(c | d) {
                return Ok(Some((c, d)));
            }
        }
    }
    Ok(None)
}

/// First `A` with `(X ∖ A^⊥)^⊥ ≠ A^⊥`.
pub fn double_perp_failure(rel: &FiniteRelation, budget: &Budget) -> Result<Option<PointSet>> {
    let perps = perp_table(rel, budget)?;
    let full = rel.full();
    Ok(all_subsets(rel.n()).find(|&a| {
        let pa = perps[a.bits() as usize];
        perps[(full - pa).bits() as usize] != pa
    }))
}

/// First open set on which the two topologies differ.
pub fn topology_mismatch(rel: &FiniteRelation, budget: &Budget) -> Result<Option<PointSet>> {
    let a = induced_topology(rel, budget)?;
    let b = closed_variant_topology(rel, budget)?;
    let sa: BTreeSet<_> = a.opens.iter().copied().collect();
    let sb: BTreeSet<_> = b.opens.iter().copied().collect();
    Ok(sa.symmetric_difference(&sb).next().copied())
}

/// `C ⊆ E^⊥`, `D ⊆ F^⊥` and `E^⊥ ⊥ F^⊥`.
pub fn is_thickening(
    rel: &FiniteRelation,
    c: PointSet,
    d: PointSet,
    e: PointSet,
    f: PointSet,
) -> bool {
    let (pe, pf) = (perp(rel, e), perp(rel, f));
    c.is_subset(pe) && d.is_subset(pf) && rel.orth(pe, pf)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Thickening {
    Found {
        e: PointSet,
        f: PointSet,
    },
    /// The relation is not normal; `brute_force` is the first pair found by
    /// exhaustive search, if any exists anyway.
    Absent {
        normality_failure: SeparationFailure,
        brute_force: Option<(PointSet, PointSet)>,
    },
}

/// Given `C ⊥ D`, returns `E` with `C ⊆ E^⊥` and `E^⊥ ⊥ D`: with
/// `B = C ∩ D` and a decomposition `(C₀, D₀)` spanning `C ⊥ D`,
/// `E = X ∖ (C' ∪ B)` for `C' = (C₀ ∖ (D ∖ B)) ∪ (C ∖ B)`.
fn thicken_once(
    rel: &FiniteRelation,
    c: PointSet,
    d: PointSet,
    budget: &Budget,
) -> Result<Option<PointSet>> {
    let b = c & d;
    let Some((c0, _)) = span_witness(rel, c, d, budget)? else {
        return Ok(None);
    };
    let c1 = (c0 - (d - b)) | (c - b);
    Ok(Some(rel.full() - (c1 | b)))
}

/// Subsets `E, F` with `C ⊆ E^⊥`, `D ⊆ F^⊥` and `E^⊥ ⊥ F^⊥`.
///
/// Normal relations get the constructive answer: one thickening step for
/// `C ⊥ D`, then another for `D ⊥ E^⊥`.
pub fn thicken_orthogonal(
    rel: &FiniteRelation,
    c: PointSet,
    d: PointSet,
    budget: &Budget,
) -> Result<Thickening> {
    if !rel.try_orth(c, d)? {
        return Err(Error::NotOrthogonal);
    }
    let profile = separation_profile(rel, budget)?;
    if let Some(failure) = profile.normal.counterexample {
        return Ok(Thickening::Absent {
            normality_failure: failure,
            brute_force: brute_force_thickening(rel, c, d, budget)?,
        });
    }
    let e = thicken_once(rel, c, d, budget)?.ok_or_else(|| {
        Error::pre("a normal relation left an orthogonal pair without a decomposition")
    })?;
    let pe = perp(rel, e);
    let f = thicken_once(rel, d, pe, budget)?.ok_or_else(|| {
        Error::pre("a normal relation left an orthogonal pair without a decomposition")
    })?;
    debug_assert!(is_thickening(rel, c, d, e, f));
    Ok(Thickening::Found { e, f })
}

/// Exhaustive search over all pairs `(E, F)`.
pub fn brute_force_thickening(
    rel: &FiniteRelation,
    c: PointSet,
    d: PointSet,
    budget: &Budget,
) -> Result<Option<(PointSet, PointSet)>> {
    let perps = perp_table(rel, budget)?;
    let es: Vec<PointSet> = all_subsets(rel.n())
        .filter(|e| c.is_subset(perps[e.bits() as usize]))
        .collect();
    let fs: Vec<PointSet> = all_subsets(rel.n())
        .filter(|f| d.is_subset(perps[f.bits() as usize]))
        .collect();
    for &e in &es {
        for &f in &fs {
            if rel.orth(perps[e.bits() as usize], perps[f.bits() as usize]) {
                return Ok(Some((e, f)));
            }
        }
    }
    Ok(None)
}

/// `C^⊥ ∩ D^⊥ = ∅` with `p ∈ C^⊥` and `q ∈ D^⊥`.
pub fn are_separators(
    rel: &FiniteRelation,
    p: PointSet,
    q: PointSet,
    c: PointSet,
    d: PointSet,
) -> bool {
    let (pc, pd) = (perp(rel, c), perp(rel, d));
    p.is_subset(pc) && q.is_subset(pd) && !pc.intersects(pd)
}

/// Separates `{x}` from `A` by perps, given `{x} ⊥ A` and `x ∉ A`: from a
/// decomposition `(C₁, D₁)` spanning `{x} ⊥ A`, take
/// `D = (C₁ ∪ {x}) ∖ A` and `C = X ∖ D`. Falls back to exhaustive search
/// when no decomposition exists.
pub fn point_set_separators(
    rel: &FiniteRelation,
    x: usize,
    a: PointSet,
    budget: &Budget,
) -> Result<Option<(PointSet, PointSet)>> {
    let px = PointSet::singleton(x);
    if a.contains(x) {
        return Err(Error::pre(format!(
            "point {} lies in the set",
            rel.ground().name(x)
        )));
    }
    if !rel.try_orth(px, a)? {
        return Err(Error::NotOrthogonal);
    }
    if let Some((c1, _)) = span_witness(rel, px, a, budget)? {
        let d = (c1 | px) - a;
        let c = rel.full() - d;
        if are_separators(rel, px, a, c, d) {
            return Ok(Some((c, d)));
        }
    }
    let perps = perp_table(rel, budget)?;
    for c in all_subsets(rel.n()) {
        let pc = perps[c.bits() as usize];
        if !pc.contains(x) {
            continue;
        }
        for d in all_subsets(rel.n()) {
            let pd = perps[d.bits() as usize];
            if a.is_subset(pd) && !pc.intersects(pd) {
                return Ok(Some((c, d)));
            }
        }
    }
    Ok(None)
}

/// `C, D` with `x ∈ C^⊥`, `y ∈ D^⊥` and `C^⊥ ∩ D^⊥ = ∅`, for distinct
/// orthogonal points.
pub fn point_separators(
    rel: &FiniteRelation,
    x: usize,
    y: usize,
    budget: &Budget,
) -> Result<Option<(PointSet, PointSet)>> {
    if x == y {
        return Err(Error::pre("separating a point from itself"));
    }
    point_set_separators(rel, x, PointSet::singleton(y), budget)
}
