//! Maps between finite sets: continuity, quotients and parallelism.

use crate::relation::{FiniteBackend, FiniteRelation, OrthTable, MAX_TABLE_POINTS};
use crate::set::{all_subsets, GroundSet, PointSet};
use crate::{Budget, Error, Result};

/// A total function between two finite ground sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    source: GroundSet,
    target: GroundSet,
    values: Vec<usize>,
}

impl FiniteMap {
    pub fn new(source: GroundSet, target: GroundSet, values: Vec<usize>) -> Result<FiniteMap> {
        if values.len() != source.len() {
            return Err(Error::invalid(format!(
                "map lists {} values for {} source points",
                values.len(),
                source.len()
            )));
        }
        if let Some((x, &v)) = values.iter().enumerate().find(|&(_, &v)| v >= target.len()) {
            return Err(Error::invalid(format!(
                "{} maps to index {v}, outside a target of {} points",
                source.name(x),
                target.len()
            )));
        }
        Ok(FiniteMap {
            source,
            target,
            values,
        })
    }

    pub fn identity(ground: GroundSet) -> FiniteMap {
        let values = (0..ground.len()).collect();
        FiniteMap {
            source: ground.clone(),
            target: ground,
            values,
        }
    }

    pub fn constant(source: GroundSet, target: GroundSet, point: usize) -> Result<FiniteMap> {
        let values = vec![point; source.len()];
        FiniteMap::new(source, target, values)
    }

    pub fn source(&self) -> &GroundSet {
        &self.source
    }

    pub fn target(&self) -> &GroundSet {
        &self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn image(&self, a: PointSet) -> PointSet {
        PointSet::from_indices(a.iter().map(|x| self.values[x]))
    }

    pub fn preimage(&self, c: PointSet) -> PointSet {
        PointSet::from_indices((0..self.values.len()).filter(|&x| c.contains(self.values[x])))
    }

    pub fn fiber(&self, y: usize) -> PointSet {
        self.preimage(PointSet::singleton(y))
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.full()) == self.target.full()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FiniteMap) -> Result<FiniteMap> {
        if self.target.len() != g.source.len() {
            return Err(Error::GroundSizeMismatch {
                left: self.target.len(),
                right: g.source.len(),
            });
        }
        let values = self.values.iter().map(|&y| g.values[y]).collect();
        Ok(FiniteMap {
            source: self.source.clone(),
            target: g.target.clone(),
            values,
        })
    }
}

/// Outcome of a continuity check: the first orthogonal pair of the target
/// whose preimages are not orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityVerdict {
    pub continuous: bool,
    pub counterexample: Option<(PointSet, PointSet)>,
}

fn check_sides(f: &FiniteMap, rel_x: &FiniteRelation, rel_y: &FiniteRelation) -> Result<()> {
    if rel_x.n() != f.source.len() {
        return Err(Error::GroundSizeMismatch {
            left: rel_x.n(),
            right: f.source.len(),
        });
    }
    if rel_y.n() != f.target.len() {
        return Err(Error::GroundSizeMismatch {
            left: rel_y.n(),
            right: f.target.len(),
        });
    }
    Ok(())
}

/// `A ⊥_Y C ⟹ f⁻¹(A) ⊥_X f⁻¹(C)`.
///
/// Orthogonal singleton pairs and the pairs `(B, Y)` with `B` bounded are
/// always checked. Targets small enough to tabulate are then scanned over
/// every pair of subsets, so the verdict does not rely on either relation
/// being determined by its singletons.
pub fn continuity_check(
    f: &FiniteMap,
    rel_x: &FiniteRelation,
    rel_y: &FiniteRelation,
) -> Result<ContinuityVerdict> {
    check_sides(f, rel_x, rel_y)?;
    let m = rel_y.n();
    let full = rel_y.full();
    let singles =
        (0..m).flat_map(|y| (0..m).map(move |z| (PointSet::singleton(y), PointSet::singleton(z))));
    let bounded = (0..m).map(|y| (PointSet::singleton(y), full));
    let broken = |(a, c): &(PointSet, PointSet)| {
        rel_y.orth(*a, *c) && !rel_x.orth(f.preimage(*a), f.preimage(*c))
    };
    let mut found = singles.chain(bounded).find(broken);
    if found.is_none() && m <= MAX_TABLE_POINTS {
        found = all_subsets(m)
            .flat_map(|a| all_subsets(m).map(move |c| (a, c)))
            .find(broken);
    }
    Ok(ContinuityVerdict {
        continuous: found.is_none(),
        counterexample: found,
    })
}

/// `C ⊥_Y D ⟺ f⁻¹(C) ⊥_X f⁻¹(D)` for a surjective `f`.
pub fn quotient_relation(rel_x: &FiniteRelation, f: &FiniteMap) -> Result<FiniteRelation> {
    if rel_x.n() != f.source.len() {
        return Err(Error::GroundSizeMismatch {
            left: rel_x.n(),
            right: f.source.len(),
        });
    }
    if let Some(y) = (0..f.target.len()).find(|&y| f.fiber(y).is_empty()) {
        return Err(Error::pre(format!(
            "map is not surjective: {} has no preimage",
            f.target.name(y)
        )));
    }
    let provenance = format!("quotient of {}", rel_x.provenance());
    match rel_x.backend() {
        FiniteBackend::Pairs(_) => Ok(FiniteRelation::from_pair_fn(
            f.target.clone(),
            provenance,
            |y, z| rel_x.orth(f.fiber(y), f.fiber(z)),
        )),
        FiniteBackend::Table(_) => {
            let table = OrthTable::from_fn(f.target.len(), |c, d| {
                rel_x.orth(f.preimage(c), f.preimage(d))
            })?;
            FiniteRelation::explicit_raw(f.target.clone(), provenance, table)
        }
    }
}

/// The factor `g` with `h = g ∘ f` through the quotient by `f`, together with
/// its continuity verdict against the quotient relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub map: FiniteMap,
    pub quotient: FiniteRelation,
    pub continuity: ContinuityVerdict,
}

/// Factors a continuous `h: X → Z` that is constant on the fibers of the
/// surjection `f: X → Y`.
pub fn universal_factor(
    rel_x: &FiniteRelation,
    f: &FiniteMap,
    h: &FiniteMap,
    rel_z: &FiniteRelation,
) -> Result<Factorization> {
    if h.source.len() != f.source.len() {
        return Err(Error::GroundSizeMismatch {
            left: h.source.len(),
            right: f.source.len(),
        });
    }
    let quotient = quotient_relation(rel_x, f)?;
    let mut values = Vec::with_capacity(f.target.len());
    for y in 0..f.target.len() {
        let fiber = f.fiber(y);
        let image = h.image(fiber);
        if image.len() != 1 {
            return Err(Error::pre(format!(
                "h is not constant on the fiber {} over {}",
                f.source.format(fiber),
                f.target.name(y)
            )));
        }
        values.push(image.first().expect("one value"));
    }
    let h_verdict = continuity_check(h, rel_x, rel_z)?;
    if let Some((a, c)) = h_verdict.counterexample {
        return Err(Error::pre(format!(
            "h is not continuous: {} ⊥ {} but their preimages are not orthogonal",
            h.target.format(a),
            h.target.format(c)
        )));
    }
    let map = FiniteMap::new(f.target.clone(), h.target.clone(), values)?;
    let continuity = continuity_check(&map, &quotient, rel_z)?;
    Ok(Factorization {
        map,
        quotient,
        continuity,
    })
}

/// A subset of `A` orthogonal to `C` that is not bounded.
pub fn parallel_witness(
    rel: &FiniteRelation,
    a: PointSet,
    c: PointSet,
    budget: &Budget,
) -> Result<Option<PointSet>> {
    budget.require("parallelism points", rel.n(), budget.pair_search_n)?;
    a.check_within(rel.n())?;
    c.check_within(rel.n())?;
    Ok(a.subsets().find(|&b| rel.orth(b, c) && !rel.is_bounded(b)))
}

/// `A` is parallel to `C`: every `B ⊆ A` with `B ⊥ C` is bounded.
pub fn parallel_sets(
    rel: &FiniteRelation,
    a: PointSet,
    c: PointSet,
    budget: &Budget,
) -> Result<bool> {
    Ok(parallel_witness(rel, a, c, budget)?.is_none())
}

/// Parallel in both directions.
pub fn mutually_parallel(
    rel: &FiniteRelation,
    a: PointSet,
    c: PointSet,
    budget: &Budget,
) -> Result<bool> {
    Ok(parallel_sets(rel, a, c, budget)? && parallel_sets(rel, c, a, budget)?)
}

/// A set `A` whose images under `f` and `g` are not mutually parallel.
pub fn parallel_maps_witness(
    rel_y: &FiniteRelation,
    f: &FiniteMap,
    g: &FiniteMap,
    budget: &Budget,
) -> Result<Option<PointSet>> {
    if f.source.len() != g.source.len() || f.target.len() != g.target.len() {
        return Err(Error::GroundSizeMismatch {
            left: f.source.len(),
            right: g.source.len(),
        });
    }
    budget.require(
        "parallel map source points",
        f.source.len(),
        budget.pair_search_n,
    )?;
    for a in all_subsets(f.source.len()) {
        if !mutually_parallel(rel_y, f.image(a), g.image(a), budget)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// `f(A)` and `g(A)` are parallel to each other for every `A`.
pub fn parallel_maps(
    rel_y: &FiniteRelation,
    f: &FiniteMap,
    g: &FiniteMap,
    budget: &Budget,
) -> Result<bool> {
    Ok(parallel_maps_witness(rel_y, f, g, budget)?.is_none())
}

/// A bounded set of `X` with an unbounded image.
pub fn bounded_image_failure(
    f: &FiniteMap,
    rel_x: &FiniteRelation,
    rel_y: &FiniteRelation,
    budget: &Budget,
) -> Result<Option<PointSet>> {
    check_sides(f, rel_x, rel_y)?;
    budget.require("bounded image points", rel_x.n(), budget.pair_search_n)?;
    Ok(all_subsets(rel_x.n()).find(|&b| rel_x.is_bounded(b) && !rel_y.is_bounded(f.image(b))))
}

/// For `A` parallel to `C`, a set `D ⊆ f(A)` orthogonal to `f(C)` that is not
/// the image of a bounded set. Checks every such `D` and every bounded `B`.
pub fn orthogonal_image_failure(
    f: &FiniteMap,
    rel_x: &FiniteRelation,
    rel_y: &FiniteRelation,
    a: PointSet,
    c: PointSet,
    budget: &Budget,
) -> Result<Option<PointSet>> {
    check_sides(f, rel_x, rel_y)?;
    budget.require("orthogonal image points", rel_x.n(), budget.pair_search_n)?;
    let bounded_images: Vec<PointSet> = all_subsets(rel_x.n())
        .filter(|&b| rel_x.is_bounded(b))
        .map(|b| f.image(b))
        .collect();
    let fc = f.image(c);
    Ok(f.image(a)
        .subsets()
        .find(|&d| rel_y.orth(d, fc) && !bounded_images.contains(&d)))
}

/// A pair `A` parallel to `C` whose images are not parallel.
pub fn parallel_image_failure(
    f: &FiniteMap,
    rel_x: &FiniteRelation,
    rel_y: &FiniteRelation,
    budget: &Budget,
) -> Result<Option<(PointSet, PointSet)>> {
    check_sides(f, rel_x, rel_y)?;
    budget.require(
        "parallel image points",
        rel_x.n().max(rel_y.n()),
        budget.triple_n,
    )?;
    let n = rel_x.n();
    for a in all_subsets(n) {
        for c in all_subsets(n) {
            if parallel_sets(rel_x, a, c, budget)?
                && !parallel_sets(rel_y, f.image(a), f.image(c), budget)?
            {
                return Ok(Some((a, c)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{FiniteMetric, FiniteTopology};
    use crate::relation::verify_finite_axioms;

    fn abc() -> GroundSet {
        GroundSet::new(["a", "b", "c"]).unwrap()
    }

    fn collapse() -> FiniteMap {
        FiniteMap::new(abc(), GroundSet::new(["p", "q"]).unwrap(), vec![0, 0, 1]).unwrap()
    }

    #[test]
    fn identity_is_continuous() {
        let rel = FiniteRelation::from_pair_fn(abc(), "r", |x, y| x + y == 1);
        let v = continuity_check(&FiniteMap::identity(abc()), &rel, &rel).unwrap();
        assert!(v.continuous);
    }

    #[test]
    fn constant_map_needs_the_whole_space_self_orthogonal() {
        let y = GroundSet::indexed(3);
        let disj = FiniteRelation::disjointness(abc());
        let target = FiniteRelation::disjointness(y.clone());
        let f = FiniteMap::constant(abc(), y.clone(), 1).unwrap();
        // {1} is not orthogonal to itself, so every pair containing it twice
        // is non-orthogonal and the map is continuous
        assert!(continuity_check(&f, &disj, &target).unwrap().continuous);
        let self_orth = FiniteRelation::from_pair_fn(y.clone(), "s", |x, z| x == 1 && z == 1);
        let v = continuity_check(&f, &disj, &self_orth).unwrap();
        assert!(!v.continuous);
        let (a, c) = v.counterexample.unwrap();
        assert!(a.contains(1) && c.contains(1));
        assert!(
            continuity_check(&f, &FiniteRelation::total(abc()), &self_orth)
                .unwrap()
                .continuous
        );
    }

    #[test]
    fn collapse_quotient_of_disjointness() {
        let q = quotient_relation(&FiniteRelation::disjointness(abc()), &collapse()).unwrap();
        assert!(q.point_orth(0, 1));
        assert!(!q.point_orth(0, 0));
        assert!(verify_finite_axioms(&q, &Budget::default()).unwrap().passed);
        let same = quotient_relation(
            &FiniteRelation::disjointness(abc()),
            &FiniteMap::identity(abc()),
        )
        .unwrap();
        assert!(same
            .same_answers(&FiniteRelation::disjointness(abc()))
            .unwrap());
    }

    #[test]
    fn non_surjective_quotient_is_rejected() {
        let f = FiniteMap::new(abc(), GroundSet::indexed(4), vec![0, 1, 2]).unwrap();
        assert!(matches!(
            quotient_relation(&FiniteRelation::disjointness(abc()), &f),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn universal_factor_of_collapse() {
        let disj = FiniteRelation::disjointness(abc());
        let two = GroundSet::indexed(2);
        let h = FiniteMap::new(abc(), two.clone(), vec![0, 0, 1]).unwrap();
        let rel_z = FiniteRelation::disjointness(two);
        let fac = universal_factor(&disj, &collapse(), &h, &rel_z).unwrap();
        assert_eq!(fac.map.values(), &[0, 1]);
        assert!(fac.continuity.continuous);
        let same = universal_factor(&disj, &collapse(), &collapse(), &fac.quotient).unwrap();
        assert_eq!(same.map.values(), &[0, 1]);
    }

    #[test]
    fn factor_requires_fiber_constant_map() {
        let disj = FiniteRelation::disjointness(abc());
        let h = FiniteMap::identity(abc());
        let err = universal_factor(&disj, &collapse(), &h, &disj).unwrap_err();
        assert!(err.to_string().contains("{a, b}"), "{err}");
    }

    #[test]
    fn a_set_is_parallel_to_itself() {
        let b = Budget::default();
        let rel = FiniteMetric::on_line(&[0.0, 1.0, 4.0]).unwrap().relation();
        for a in all_subsets(3) {
            assert!(parallel_sets(&rel, a, a, &b).unwrap());
        }
    }

    #[test]
    fn topological_parallelism_is_closure_containment() {
        let b = Budget::default();
        let g = GroundSet::indexed(3);
        for top in [
            FiniteTopology::discrete(g.clone()),
            FiniteTopology::indiscrete(g.clone()),
        ] {
            let rel = top.relation();
            for a in all_subsets(3) {
                for c in all_subsets(3) {
                    assert_eq!(
                        parallel_sets(&rel, a, c, &b).unwrap(),
                        a.is_subset(top.closure(c))
                    );
                }
            }
        }
    }

    #[test]
    fn closure_containment_fails_without_t1() {
        // every nonempty closed set contains 2, so nonempty sets are never
        // orthogonal and {0} is parallel to {2} although cl({2}) = {2}
        let top = FiniteTopology::new(
            GroundSet::indexed(3),
            [
                PointSet(0),
                PointSet(0b001),
                PointSet(0b011),
                PointSet(0b111),
            ],
        )
        .unwrap();
        let rel = top.relation();
        assert!(parallel_sets(&rel, PointSet(0b001), PointSet(0b100), &Budget::default()).unwrap());
        assert!(!PointSet(0b001).is_subset(top.closure(PointSet(0b100))));
    }

    #[test]
    fn distinct_maps_into_a_discrete_space_are_not_parallel() {
        let b = Budget::default();
        let rel = FiniteRelation::disjointness(GroundSet::indexed(2));
        let f = FiniteMap::new(GroundSet::indexed(2), GroundSet::indexed(2), vec![0, 1]).unwrap();
        let g = FiniteMap::new(GroundSet::indexed(2), GroundSet::indexed(2), vec![1, 1]).unwrap();
        assert!(parallel_maps(&rel, &f, &f, &b).unwrap());
        assert_eq!(
            parallel_maps_witness(&rel, &f, &g, &b).unwrap(),
            Some(PointSet(0b01))
        );
    }
}
