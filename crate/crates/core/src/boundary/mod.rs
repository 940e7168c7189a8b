//! Boundaries from observable lattices and large-scale compactifications.

mod finite;
mod lattice;
mod line;

pub use finite::{
    describe_classes, finite_compactification, finite_ls_compact, verify_ls_compactification,
    zero_set_lattice, CanonicalForm, CompactificationReport, FiniteCompactification, LsCompactness,
};
pub use lattice::{
    boundary, closure_lattice_failure, induced_boundary_map, lattice_close, similar,
    transitivity_failure, ultrafilters, Boundary, InducedMap, Observable, ObservableLattice,
    Observer, Ultrafilter,
};
pub use line::{
    ends_lattice, ls_compact_check, verify_line_compactification, End, LineCompactification,
    LineCompactificationReport, LineCover, LineOpen, LineSpace,
};

/// Default cap on lattice sizes.
pub const DEFAULT_LATTICE_CAP: usize = 4096;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line::{EpSet, LineRule};
    use crate::maps::EventuallyAffine;
    use crate::models::FiniteTopology;
    use crate::relation::{FiniteRelation, LineRelation};
    use crate::set::{GroundSet, PointSet};
    use crate::{Budget, Error};

    fn metric_line() -> LineRelation {
        LineRelation::new(LineRule::Metric)
    }

    fn line_family() -> Vec<EpSet> {
        vec![
            EpSet::naturals(),
            EpSet::negative_naturals(),
            EpSet::empty(),
            EpSet::all(),
            EpSet::finite([0, 3, -7]),
            EpSet::progression(0, 2, crate::line::Direction::Right),
            EpSet::progression(1, 3, crate::line::Direction::Both),
            EpSet::progression(-4, 5, crate::line::Direction::Left),
        ]
    }

    #[test]
    fn ends_lattice_gives_two_ends() {
        let rel = metric_line();
        let lattice = ends_lattice(&rel, DEFAULT_LATTICE_CAP).unwrap();
        // ∅, {0}, −ℕ, ℕ, ℤ
        assert_eq!(lattice.len(), 5);
        let b = boundary(&rel, &lattice).unwrap();
        assert_eq!(b.ultrafilters.len(), 2);
        assert_eq!(b.class_count(), 2);
        assert!(b.identifications.is_empty());
        assert_eq!(closure_lattice_failure(&rel, &b), None);
    }

    #[test]
    fn empty_seeds_give_trivial_lattice() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(3));
        let lattice = lattice_close(&rel, [], 10).unwrap();
        assert_eq!(lattice.members(), &[PointSet::EMPTY, PointSet::full(3)]);
        let filters = ultrafilters(&lattice, &rel);
        assert_eq!(filters.len(), 1);
        // the filter {X} is the point filter of every point at once
        assert_eq!(filters[0].principal_at, vec!["x0", "x1", "x2"]);
        assert!(matches!(
            lattice_close(&rel, (0..3).map(PointSet::singleton), 4),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn disjointness_has_empty_boundary() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(4));
        let budget = Budget::default();
        let lattice = zero_set_lattice(&rel, &budget, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(lattice.len(), 16);
        let b = boundary(&rel, &lattice).unwrap();
        assert!(b.ultrafilters.iter().all(|u| u.is_principal()));
        assert_eq!(b.class_count(), 0);
        let c = finite_compactification(&rel, &b).unwrap();
        assert_eq!(c.topology, FiniteTopology::discrete(rel.ground().clone()));
        let report = verify_ls_compactification(&rel, &c, &budget).unwrap();
        assert!(report.passes(), "{report:?}");
        assert!(report.consistent());
    }

    #[test]
    fn sierpinski_points_share_a_class() {
        let rel = FiniteTopology::sierpinski().relation();
        let lattice = zero_set_lattice(&rel, &Budget::default(), DEFAULT_LATTICE_CAP).unwrap();
        let b = boundary(&rel, &lattice).unwrap();
        assert_eq!(b.identifications.len(), 1);
        assert_eq!(
            b.identifications[0].0,
            vec!["a".to_string(), "b".to_string()]
        );
        assert!(finite_compactification(&rel, &b).is_err());
    }

    #[test]
    fn path_relation_breaks_transitivity() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let rel = FiniteRelation::from_pair_fn(g, "path", |x, y| (x, y) == (0, 2));
        let lattice = lattice_close(&rel, (0..3).map(PointSet::singleton), 16).unwrap();
        let filters = ultrafilters(&lattice, &rel);
        assert_eq!(transitivity_failure(&rel, &filters), Some((0, 1, 2)));
        assert!(matches!(
            boundary(&rel, &lattice),
            Err(Error::NotTransitive(..))
        ));
    }

    #[test]
    fn two_lattices_give_the_same_compactification() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(3));
        let budget = Budget::default();
        let a = zero_set_lattice(&rel, &budget, DEFAULT_LATTICE_CAP).unwrap();
        let b = lattice_close(&rel, (0..3).map(PointSet::singleton), DEFAULT_LATTICE_CAP).unwrap();
        let ca = finite_compactification(&rel, &boundary(&rel, &a).unwrap()).unwrap();
        let cb = finite_compactification(&rel, &boundary(&rel, &b).unwrap()).unwrap();
        assert_eq!(ca.canonical_form(), cb.canonical_form());
    }

    #[test]
    fn ends_compactification_passes_and_glued_fails() {
        let rel = metric_line();
        let family = line_family();
        let ends = verify_line_compactification(&rel, LineCompactification::Ends, &family).unwrap();
        assert!(ends.passes(), "{ends:?}");
        assert_eq!(ends.separation_failure, None);
        let glued =
            verify_line_compactification(&rel, LineCompactification::GluedEnds, &family).unwrap();
        assert_eq!(
            glued.closure_mismatch,
            Some((EpSet::naturals(), EpSet::negative_naturals()))
        );
    }

    #[test]
    fn compactness_of_line_spaces() {
        let singletons = LineCover {
            opens: Vec::new(),
            with_singletons: true,
        };
        assert!(
            !ls_compact_check(LineSpace::Discrete, &singletons)
                .unwrap()
                .compact
        );
        let tails = LineCover {
            opens: vec![
                LineOpen {
                    set: EpSet::naturals().translate(4),
                    ends: vec![End::Plus],
                },
                LineOpen {
                    set: EpSet::negative_naturals(),
                    ends: vec![End::Minus],
                },
            ],
            with_singletons: true,
        };
        let space = LineSpace::Compactified(LineCompactification::Ends);
        assert!(ls_compact_check(space, &tails).unwrap().compact);
        let bad = LineCover {
            opens: vec![LineOpen {
                set: EpSet::finite([1]),
                ends: vec![End::Plus],
            }],
            with_singletons: true,
        };
        assert!(ls_compact_check(space, &bad).is_err());
    }

    #[test]
    fn induced_maps_on_the_ends() {
        let rel = metric_line();
        let lattice = ends_lattice(&rel, DEFAULT_LATTICE_CAP).unwrap();
        let b = boundary(&rel, &lattice).unwrap();
        let induced = |f: EventuallyAffine| {
            induced_boundary_map(&rel, &b, &rel, &b, |s| f.preimage(s)).unwrap()
        };
        let identity = InducedMap { images: vec![0, 1] };
        assert_eq!(induced(EventuallyAffine::translation(5)), identity);
        assert_eq!(
            induced(EventuallyAffine::affine(-1, 0)),
            InducedMap { images: vec![1, 0] }
        );
        assert_eq!(
            induced(EventuallyAffine::translation(0)),
            induced(EventuallyAffine::translation(5))
        );
    }
}
