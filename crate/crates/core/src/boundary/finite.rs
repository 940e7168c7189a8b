//! Large-scale compactifications of finite relations.

use super::lattice::{lattice_close, Boundary, ObservableLattice, Observer};
use crate::functions::zero_lattice;
use crate::models::FiniteTopology;
use crate::relation::{separation_profile, FiniteRelation};
use crate::set::{all_subsets, GroundSet, PointSet};
use crate::{Budget, Error, Result};

/// A finite topological space containing `X` as its first `n` points, with a
/// selected bornology of subsets of `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCompactification {
    pub topology: FiniteTopology,
    pub inner: usize,
    pub bornology: Vec<PointSet>,
}

impl FiniteCompactification {
    pub fn new(
        topology: FiniteTopology,
        inner: usize,
        bornology: Vec<PointSet>,
    ) -> Result<FiniteCompactification> {
        if inner > topology.n() {
            return Err(Error::invalid(format!(
                "{inner} inner points in a space of {} points",
                topology.n()
            )));
        }
        let x = PointSet::full(inner);
        if let Some(b) = bornology.iter().find(|b| !b.is_subset(x)) {
            return Err(Error::invalid(format!(
                "bornology member {} leaves the inner points",
                topology.ground().format(*b)
            )));
        }
        let mut bornology = bornology;
        bornology.sort();
        bornology.dedup();
        Ok(FiniteCompactification {
            topology,
            inner,
            bornology,
        })
    }

    pub fn inner_points(&self) -> PointSet {
        PointSet::full(self.inner)
    }

    pub fn boundary_points(&self) -> PointSet {
        self.topology.ground().full() - self.inner_points()
    }

    /// For each point, the subsets of `X` whose closure contains it.
    fn traces(&self) -> Vec<Vec<PointSet>> {
        let subsets: Vec<PointSet> = all_subsets(self.inner).collect();
        (0..self.topology.n())
            .map(|p| {
                subsets
                    .iter()
                    .copied()
                    .filter(|&c| self.topology.closure(c).contains(p))
                    .collect()
            })
            .collect()
    }

    /// A description invariant under homeomorphisms fixing `X`: boundary
    /// points are named by their closure traces, and every smallest open
    /// neighbourhood is recorded by its inner part and the traces it holds.
    pub fn canonical_form(&self) -> CanonicalForm {
        let traces = self.traces();
        let describe = |u: PointSet| {
            let mut outer: Vec<Vec<PointSet>> = (u - self.inner_points())
                .iter()
                .map(|p| traces[p].clone())
                .collect();
            outer.sort();
            (u & self.inner_points(), outer)
        };
        let inner_nbhds = (0..self.inner)
            .map(|x| describe(self.topology.min_open(x)))
            .collect();
        let mut outer_nbhds: Vec<_> = self
            .boundary_points()
            .iter()
            .map(|p| (traces[p].clone(), describe(self.topology.min_open(p))))
            .collect();
        outer_nbhds.sort();
        CanonicalForm {
            inner_nbhds,
            outer_nbhds,
        }
    }
}

type Neighbourhood = (PointSet, Vec<Vec<PointSet>>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    inner_nbhds: Vec<Neighbourhood>,
    outer_nbhds: Vec<(Vec<PointSet>, Neighbourhood)>,
}

/// The zero sets of the relation as an observable lattice.
pub fn zero_set_lattice(
    rel: &FiniteRelation,
    budget: &Budget,
    cap: usize,
) -> Result<ObservableLattice<PointSet>> {
    lattice_close(rel, zero_lattice(rel, budget)?.members, cap)
}

/// `X ∪ ∂X` with the topology whose closed sets are generated by `Z̄`, the
/// lattice member `Z` together with the boundary classes in its closure.
pub fn finite_compactification(
    rel: &FiniteRelation,
    b: &Boundary<PointSet>,
) -> Result<FiniteCompactification> {
    let n = rel.n();
    for (points, members) in &b.identifications {
        let principal = members.iter().all(|&i| b.ultrafilters[i].is_principal());
        if points.len() > 1 || !principal {
            return Err(Error::pre(format!(
                "the boundary identifies {} with other points; X does not embed",
                points.join(", ")
            )));
        }
    }
    let k = b.classes.len();
    let names: Vec<String> = rel
        .ground()
        .names()
        .iter()
        .cloned()
        .chain((0..k).map(|i| format!("∂{i}")))
        .collect();
    let ground = GroundSet::new(names)?;
    let full = ground.full();
    let closed: Vec<PointSet> = b
        .lattice
        .members()
        .iter()
        .map(|z| {
            b.closure_classes(rel, z)
                .into_iter()
                .fold(*z, |acc, c| acc.with(n + c))
        })
        .collect();
    let min_opens: Vec<PointSet> = (0..full.len())
        .map(|p| {
            let far = closed
                .iter()
                .filter(|z| !z.contains(p))
                .fold(PointSet::EMPTY, |acc, &z| acc | z);
            full - far
        })
        .collect();
    let topology = FiniteTopology::from_min_opens(ground, &min_opens)?;
    let bornology = all_subsets(n).filter(|&s| rel.is_bounded(s)).collect();
    FiniteCompactification::new(topology, n, bornology)
}

/// Large-scale compactness of a finite space: any open cover is finite, so
/// it leaves the empty residual, which is bounded as soon as `∅` belongs to
/// the bornology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsCompactness {
    pub compact: bool,
    pub reason: String,
}

pub fn finite_ls_compact(c: &FiniteCompactification) -> LsCompactness {
    let has_empty = c.bornology.contains(&PointSet::EMPTY);
    LsCompactness {
        compact: has_empty,
        reason: if has_empty {
            "finite space: the whole cover leaves an empty, bounded residual".to_string()
        } else {
            "the bornology does not contain the empty set".to_string()
        },
    }
}

/// Checks of the compactification conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactificationReport {
    pub dense: bool,
    /// A subset of `X` that is bounded but not selected, or selected but not
    /// bounded.
    pub bornology_mismatch: Option<PointSet>,
    /// A selected set that is not open and closed.
    pub bornology_not_clopen: Option<PointSet>,
    pub ls_compact: LsCompactness,
    /// A pair whose orthogonality disagrees with its closures.
    pub closure_mismatch: Option<(PointSet, PointSet)>,
    pub hausdorff: bool,
    pub relation_normal: bool,
}

impl CompactificationReport {
    pub fn passes(&self) -> bool {
        self.dense
            && self.bornology_mismatch.is_none()
            && self.bornology_not_clopen.is_none()
            && self.ls_compact.compact
            && self.closure_mismatch.is_none()
    }

    /// A Hausdorff compactification forces a normal relation.
    pub fn consistent(&self) -> bool {
        !(self.passes() && self.hausdorff) || self.relation_normal
    }
}

pub fn verify_ls_compactification(
    rel: &FiniteRelation,
    c: &FiniteCompactification,
    budget: &Budget,
) -> Result<CompactificationReport> {
    let n = rel.n();
    budget.require("compactification points", n, budget.exhaustive_n)?;
    if c.inner != n {
        return Err(Error::GroundSizeMismatch {
            left: n,
            right: c.inner,
        });
    }
    let top = &c.topology;
    let x = c.inner_points();
    let dense = top.closure(x) == top.ground().full();
    let bornology_mismatch =
        all_subsets(n).find(|&s| rel.is_bounded(s) != c.bornology.binary_search(&s).is_ok());
    let bornology_not_clopen = c
        .bornology
        .iter()
        .copied()
        .find(|&s| !(top.is_open(s) && top.is_closed(s)));
    let mut closure_mismatch = None;
    'pairs: for a in all_subsets(n) {
        let ca = top.closure(a);
        for d in all_subsets(n) {
            let meet = ca & top.closure(d);
            let predicted = meet.is_subset(x) && rel.is_bounded(meet);
            if rel.orth(a, d) != predicted {
                closure_mismatch = Some((a, d));
                break 'pairs;
            }
        }
    }
    Ok(CompactificationReport {
        dense,
        bornology_mismatch,
        bornology_not_clopen,
        ls_compact: finite_ls_compact(c),
        closure_mismatch,
        hausdorff: top.is_hausdorff(),
        relation_normal: separation_profile(rel, budget)?.normal.holds,
    })
}

/// Labels for reports on finite relations.
pub fn describe_classes(rel: &FiniteRelation, b: &Boundary<PointSet>) -> Vec<String> {
    b.classes
        .iter()
        .map(|class| {
            let gens: Vec<String> = class
                .iter()
                .map(|&i| rel.describe(&b.ultrafilters[i].generator))
                .collect();
            gens.join(" ∼ ")
        })
        .collect()
}
