//! Observable lattices, boundaries and large-scale compactifications.

use ortho_core::boundary::{
    boundary, closure_lattice_failure, ends_lattice, finite_compactification, finite_ls_compact,
    induced_boundary_map, lattice_close, ultrafilters, verify_line_compactification,
    verify_ls_compactification, zero_set_lattice, End, InducedMap, LineCompactification,
    DEFAULT_LATTICE_CAP,
};
use ortho_core::corpus::corpus;
use ortho_core::line::{Direction, EpSet, LineRule};
use ortho_core::maps::EventuallyAffine;
use ortho_core::models::Bornology;
use ortho_core::relation::{separation_profile, FiniteRelation, LineRelation};
use ortho_core::set::{GroundSet, PointSet};
use ortho_core::Budget;

fn metric_line() -> LineRelation {
    LineRelation::new(LineRule::Metric)
}

#[test]
fn ends_lattice_members() {
    let lattice = ends_lattice(&metric_line(), DEFAULT_LATTICE_CAP).unwrap();
    let mut expected = vec![
        EpSet::empty(),
        EpSet::finite([0]),
        EpSet::negative_naturals(),
        EpSet::naturals(),
        EpSet::all(),
    ];
    expected.sort();
    assert_eq!(lattice.members(), expected.as_slice());
    let filters = ultrafilters(&lattice, &metric_line());
    let mut gens: Vec<EpSet> = filters.iter().map(|u| u.generator.clone()).collect();
    gens.sort();
    let mut ends = vec![EpSet::naturals(), EpSet::negative_naturals()];
    ends.sort();
    assert_eq!(gens, ends);
    assert!(filters.iter().all(|u| !u.is_principal()));
}

#[test]
fn zero_set_lattices_are_closed_and_filters_minimal() {
    let budget = Budget::default();
    for entry in corpus(5, 4).unwrap() {
        let rel = &entry.relation;
        let lattice = zero_set_lattice(rel, &budget, DEFAULT_LATTICE_CAP).unwrap();
        let members = lattice.members();
        for &a in members {
            for &c in members {
                assert!(
                    lattice.contains(&(a | c)) && lattice.contains(&(a & c)),
                    "{}",
                    entry.name
                );
            }
        }
        for u in ultrafilters(&lattice, rel) {
            assert!(!rel.is_bounded(u.generator));
            for &m in members {
                if m != u.generator && m.is_subset(u.generator) {
                    assert!(
                        rel.is_bounded(m),
                        "{}: {m:?} below {:?}",
                        entry.name,
                        u.generator
                    );
                }
            }
        }
    }
}

#[test]
fn classes_partition_the_ultrafilters() {
    let budget = Budget::default();
    for entry in corpus(6, 4).unwrap() {
        let rel = &entry.relation;
        let lattice = zero_set_lattice(rel, &budget, DEFAULT_LATTICE_CAP).unwrap();
        let Ok(b) = boundary(rel, &lattice) else {
            continue;
        };
        let mut seen: Vec<usize> = b.classes.iter().flatten().copied().collect();
        seen.extend(
            b.identifications
                .iter()
                .flat_map(|(_, c)| c.iter().copied()),
        );
        seen.sort_unstable();
        assert_eq!(
            seen,
            (0..b.ultrafilters.len()).collect::<Vec<_>>(),
            "{}",
            entry.name
        );
        for class in &b.classes {
            assert!(class.iter().all(|&i| !b.ultrafilters[i].is_principal()));
        }
    }
}

#[test]
fn normal_corpus_models_compactify() {
    let budget = Budget::default();
    let mut checked = 0;
    for entry in corpus(7, 5).unwrap() {
        let rel = &entry.relation;
        if !separation_profile(rel, &budget).unwrap().normal.holds {
            continue;
        }
        let lattice = zero_set_lattice(rel, &budget, DEFAULT_LATTICE_CAP).unwrap();
        let b = boundary(rel, &lattice).unwrap();
        assert_eq!(closure_lattice_failure(rel, &b), None, "{}", entry.name);
        let c = finite_compactification(rel, &b).unwrap();
        let report = verify_ls_compactification(rel, &c, &budget).unwrap();
        assert!(report.passes(), "{}: {report:?}", entry.name);
        checked += 1;
    }
    assert!(checked > 10);
}

#[test]
fn finite_models_with_empty_bounded_set_are_compact() {
    let g = GroundSet::indexed(3);
    let rel = Bornology::generated(g, [PointSet::singleton(1)])
        .unwrap()
        .relation();
    let lattice = zero_set_lattice(&rel, &Budget::default(), DEFAULT_LATTICE_CAP).unwrap();
    let b = boundary(&rel, &lattice).unwrap();
    let c = finite_compactification(&rel, &b).unwrap();
    assert!(c.bornology.contains(&PointSet::EMPTY));
    assert!(finite_ls_compact(&c).compact);
}

#[test]
fn identity_induces_the_identity_on_finite_boundaries() {
    let rel = FiniteRelation::disjointness(GroundSet::indexed(3));
    let lattice =
        lattice_close(&rel, (0..3).map(PointSet::singleton), DEFAULT_LATTICE_CAP).unwrap();
    let b = boundary(&rel, &lattice).unwrap();
    let induced = induced_boundary_map(&rel, &b, &rel, &b, |s| *s).unwrap();
    assert_eq!(induced.images, (0..b.class_count()).collect::<Vec<_>>());
}

#[test]
fn line_ends_and_induced_maps() {
    let rel = metric_line();
    let lattice = ends_lattice(&rel, DEFAULT_LATTICE_CAP).unwrap();
    let b = boundary(&rel, &lattice).unwrap();
    assert_eq!(b.class_count(), 2);
    let map =
        |f: EventuallyAffine| induced_boundary_map(&rel, &b, &rel, &b, |s| f.preimage(s)).unwrap();
    assert_eq!(
        map(EventuallyAffine::translation(5)),
        InducedMap { images: vec![0, 1] }
    );
    assert_eq!(
        map(EventuallyAffine::affine(-1, 0)),
        InducedMap { images: vec![1, 0] }
    );
    assert_eq!(
        map(EventuallyAffine::affine(1, 0)),
        map(EventuallyAffine::affine(1, 5))
    );
}

#[test]
fn line_compactifications() {
    let rel = metric_line();
    let family = vec![
        EpSet::naturals(),
        EpSet::negative_naturals(),
        EpSet::all(),
        EpSet::empty(),
        EpSet::finite([2, -9]),
        EpSet::progression(3, 4, Direction::Both),
        EpSet::progression(1, 2, Direction::Left),
    ];
    let ends = verify_line_compactification(&rel, LineCompactification::Ends, &family).unwrap();
    assert!(ends.passes());
    assert_eq!(ends.family_size, family.len());
    assert_eq!(
        LineCompactification::Ends.closure_ends(&EpSet::progression(3, 4, Direction::Both)),
        vec![End::Minus, End::Plus]
    );
    let glued =
        verify_line_compactification(&rel, LineCompactification::GluedEnds, &family).unwrap();
    assert!(!glued.passes());
    assert_eq!(
        glued.closure_mismatch,
        Some((EpSet::naturals(), EpSet::negative_naturals()))
    );
}
