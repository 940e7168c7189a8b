//! Continuous maps, quotients, parallelism and chain-valued functions.

use ortho_core::functions::{
    chain_continuity_witness, compatibility_conditions, extend_function, intersect_relations,
    is_chain_continuous, paste, separating_function, ChainFunction, Extension,
    PartialChainFunction, Pasting,
};
use ortho_core::line::{
    hausdorff_distance, parallel_sets as line_parallel, Direction, EpSet, LineRule,
};
use ortho_core::maps::{
    continuity_check, line_continuity, observable_family, parallel_line_maps, parallel_maps,
    parallel_on_family, parallel_sets, quotient_relation, universal_factor, EventuallyAffine,
    FiniteMap,
};
use ortho_core::models::{Bornology, FiniteMetric, FiniteTopology};
use ortho_core::relation::FiniteRelation;
use ortho_core::set::{all_subsets, GroundSet, PointSet};
use ortho_core::{Budget, Error};

fn abc() -> GroundSet {
    GroundSet::new(["a", "b", "c"]).unwrap()
}

fn pq() -> GroundSet {
    GroundSet::new(["p", "q"]).unwrap()
}

fn sierpinski() -> FiniteRelation {
    FiniteTopology::sierpinski().relation()
}

/// Points `0, 1` and `2, 3` form two blocks; points are orthogonal exactly
/// across blocks.
fn two_blocks() -> FiniteRelation {
    FiniteRelation::from_pair_fn(GroundSet::indexed(4), "blocks", |x, y| x / 2 != y / 2)
}

#[test]
fn identity_maps_are_continuous() {
    for rel in [
        sierpinski(),
        FiniteRelation::disjointness(abc()),
        two_blocks(),
    ] {
        let id = FiniteMap::identity(rel.ground().clone());
        assert!(continuity_check(&id, &rel, &rel).unwrap().continuous);
    }
}

#[test]
fn constant_maps_into_small_scale_targets_are_continuous() {
    let y = FiniteMetric::on_line(&[0.0, 1.0, 4.0]).unwrap().relation();
    let x = sierpinski();
    for p in 0..3 {
        let f = FiniteMap::constant(x.ground().clone(), y.ground().clone(), p).unwrap();
        assert!(continuity_check(&f, &x, &y).unwrap().continuous);
    }
    // into a target with a self-orthogonal point the pair ({p}, {p}) pulls back to (X, X)
    let born = Bornology::generated(pq(), [PointSet::singleton(0)])
        .unwrap()
        .relation();
    let f = FiniteMap::constant(x.ground().clone(), pq(), 0).unwrap();
    let v = continuity_check(&f, &x, &born).unwrap();
    assert!(!v.continuous);
    let (a, c) = v.counterexample.unwrap();
    assert!(born.orth(a, c) && !x.orth(f.preimage(a), f.preimage(c)));
}

#[test]
fn translations_of_the_line_are_continuous() {
    let f = EventuallyAffine::translation(5);
    let family = observable_family(4);
    let v = line_continuity(
        &f,
        LineRule::Metric,
        LineRule::Metric,
        &family,
        &Budget::default(),
    )
    .unwrap();
    assert!(v.continuous && v.pairs_checked > 0);
}

#[test]
fn quotient_by_collapsing_two_points() {
    let rel = FiniteRelation::disjointness(abc());
    let f = FiniteMap::new(abc(), pq(), vec![0, 0, 1]).unwrap();
    let q = quotient_relation(&rel, &f).unwrap();
    assert!(q.point_orth(0, 1));
    assert!(!q.point_orth(0, 0));
    let id = FiniteMap::identity(abc());
    assert!(quotient_relation(&rel, &id)
        .unwrap()
        .same_answers(&rel)
        .unwrap());
    let not_onto = FiniteMap::new(abc(), pq(), vec![0, 0, 0]).unwrap();
    assert!(matches!(
        quotient_relation(&rel, &not_onto),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn universal_factorization() {
    let rel = FiniteRelation::disjointness(abc());
    let f = FiniteMap::new(abc(), pq(), vec![0, 0, 1]).unwrap();
    let same = universal_factor(&rel, &f, &f, &quotient_relation(&rel, &f).unwrap()).unwrap();
    assert_eq!(same.map.values(), [0, 1]);

    let z = FiniteRelation::disjointness(GroundSet::new(["0", "1"]).unwrap());
    let h = FiniteMap::new(abc(), z.ground().clone(), vec![0, 0, 1]).unwrap();
    let fac = universal_factor(&rel, &f, &h, &z).unwrap();
    assert_eq!(fac.map.values(), [0, 1]);
    assert!(fac.continuity.continuous);
    assert_eq!(f.then(&fac.map).unwrap().values(), h.values());

    let split = FiniteMap::new(abc(), z.ground().clone(), vec![0, 1, 1]).unwrap();
    let err = universal_factor(&rel, &f, &split, &z).unwrap_err();
    assert!(
        err.to_string().contains("{a, b}") || err.to_string().contains("a, b"),
        "{err}"
    );
}

#[test]
fn parallelism_of_finite_sets() {
    let b = Budget::default();
    let rels = [
        sierpinski(),
        two_blocks(),
        FiniteRelation::disjointness(abc()),
    ];
    for rel in &rels {
        for a in all_subsets(rel.n()) {
            assert!(parallel_sets(rel, a, a, &b).unwrap());
            // only bounded sets are parallel to the empty set
            assert_eq!(
                parallel_sets(rel, a, PointSet::EMPTY, &b).unwrap(),
                rel.is_bounded(a)
            );
        }
    }
}

#[test]
fn parallelism_in_a_topology_is_closure_contact() {
    let b = Budget::default();
    let g = abc();
    let t = FiniteTopology::new(
        g.clone(),
        [PointSet::EMPTY, PointSet(0b001), PointSet(0b011), g.full()],
    )
    .unwrap();
    let rel = t.relation();
    for a in all_subsets(3) {
        for c in all_subsets(3) {
            let contact = a
                .iter()
                .all(|x| t.closure(PointSet::singleton(x)).intersects(t.closure(c)));
            assert_eq!(parallel_sets(&rel, a, c, &b).unwrap(), contact);
            if a.is_subset(t.closure(c)) {
                assert!(parallel_sets(&rel, a, c, &b).unwrap());
            }
        }
    }
    let discrete = FiniteTopology::discrete(g);
    let rel = discrete.relation();
    for a in all_subsets(3) {
        for c in all_subsets(3) {
            assert_eq!(
                parallel_sets(&rel, a, c, &b).unwrap(),
                a.is_subset(discrete.closure(c))
            );
        }
    }
}

#[test]
fn parallel_sets_on_the_line() {
    let n = EpSet::naturals();
    let shifted = n.translate(5);
    assert!(line_parallel(&n, &shifted) && line_parallel(&shifted, &n));
    assert_eq!(hausdorff_distance(&n, &shifted), Some(5));
    assert!(!line_parallel(&n, &EpSet::negative_naturals()));
}

#[test]
fn parallel_maps_on_the_line() {
    let id = EventuallyAffine::affine(1, 0);
    let shift = EventuallyAffine::affine(1, 5);
    let double = EventuallyAffine::affine(2, 0);
    assert!(parallel_line_maps(&id, &id).parallel);
    assert!(parallel_line_maps(&id, &shift).parallel);
    assert!(!parallel_line_maps(&id, &double).parallel);
    let family = vec![EpSet::finite([1, 2, 3]), EpSet::naturals()];
    assert_eq!(parallel_on_family(&id, &shift, &family), None);
    assert_eq!(
        parallel_line_maps(&id, &double).diverging,
        Some(Direction::Right)
    );
    // n and 2n drift apart pointwise, yet ℕ and 2ℕ are parallel as sets
    assert_eq!(parallel_on_family(&id, &double, &family), None);
}

#[test]
fn parallel_finite_maps() {
    let b = Budget::default();
    let rel = two_blocks();
    let f = FiniteMap::identity(rel.ground().clone());
    assert!(parallel_maps(&rel, &f, &f, &b).unwrap());
}

#[test]
fn chain_continuity() {
    let s = sierpinski();
    assert!(is_chain_continuous(&s, &ChainFunction::constant(2, 4, 3).unwrap()).unwrap());
    let f = ChainFunction::new(1, vec![0, 1]).unwrap();
    assert!(!is_chain_continuous(&s, &f).unwrap());
    let (p, q) = chain_continuity_witness(&s, &f).unwrap().unwrap();
    assert_eq!(p | q, s.full());
    let d = FiniteRelation::disjointness(abc());
    for levels in [[0, 1, 2], [2, 2, 0], [1, 0, 1]] {
        assert!(is_chain_continuous(&d, &ChainFunction::new(2, levels.to_vec()).unwrap()).unwrap());
    }
}

#[test]
fn separating_functions() {
    let d = FiniteRelation::disjointness(GroundSet::indexed(4));
    let (c, dd) = (PointSet::from_indices([0, 1]), PointSet::from_indices([3]));
    let f = separating_function(&d, c, dd, 1).unwrap().unwrap();
    assert_eq!(f, ChainFunction::indicator(4, dd));
    let s = sierpinski();
    assert_eq!(
        separating_function(&s, PointSet::singleton(0), PointSet::singleton(1), 1).unwrap(),
        None
    );
}

#[test]
fn pasting() {
    let rel = two_blocks();
    let low = PartialChainFunction::new(4, vec![Some(0), Some(0), None, None]).unwrap();
    let high = PartialChainFunction::new(4, vec![None, None, Some(4), Some(4)]).unwrap();
    match paste(&rel, &[low, high], 1, 3).unwrap() {
        Pasting::Pasted {
            function,
            certified,
        } => {
            assert!(certified);
            assert_eq!(function.levels(), [0, 0, 4, 4]);
        }
        other => panic!("expected a pasted function, got {other:?}"),
    }

    let first = PartialChainFunction::new(4, vec![Some(0), None, None, None]).unwrap();
    let rest = PartialChainFunction::new(4, vec![None, Some(4), Some(4), Some(4)]).unwrap();
    assert_eq!(
        paste(&rel, &[first, rest], 1, 3).unwrap(),
        Pasting::HypothesisFails {
            lower: PointSet::singleton(0),
            upper: PointSet::from_indices([1, 2, 3]),
        }
    );

    let whole = ChainFunction::new(4, vec![1, 1, 3, 3]).unwrap();
    match paste(&rel, &[PartialChainFunction::from(&whole)], 1, 3).unwrap() {
        Pasting::Pasted { function, .. } => assert_eq!(function, whole),
        other => panic!("expected the function back, got {other:?}"),
    }
}

#[test]
fn extensions() {
    let rel = two_blocks();
    let whole = ChainFunction::new(2, vec![1, 1, 2, 2]).unwrap();
    assert_eq!(
        extend_function(&rel, &PartialChainFunction::from(&whole), 0).unwrap(),
        Extension::Extended(whole)
    );

    let d = FiniteRelation::disjointness(abc());
    let partial = PartialChainFunction::new(3, vec![Some(2), None, None]).unwrap();
    match extend_function(&d, &partial, 0).unwrap() {
        Extension::Extended(g) => assert_eq!(g.levels(), [2, 0, 0]),
        other => panic!("expected an extension, got {other:?}"),
    }

    let clash = PartialChainFunction::new(1, vec![Some(0), Some(1), None, None]).unwrap();
    assert_eq!(
        extend_function(&rel, &clash, 0).unwrap(),
        Extension::Conflict {
            component: PointSet::from_indices([0, 1]),
            levels: (0, 1),
        }
    );
}

#[test]
fn intersections() {
    let s = sierpinski();
    let g = s.ground().clone();
    assert!(intersect_relations(&s, &s)
        .unwrap()
        .same_answers(&s)
        .unwrap());
    let d = FiniteRelation::disjointness(g.clone());
    assert!(intersect_relations(&d, &s)
        .unwrap()
        .same_answers(&s)
        .unwrap());
    let t = FiniteRelation::total(g);
    assert!(intersect_relations(&t, &s)
        .unwrap()
        .same_answers(&s)
        .unwrap());
}

#[test]
fn compatibility_of_large_and_small_scale() {
    let b = Budget::default();
    let g = abc();
    let report = compatibility_conditions(
        &FiniteRelation::total(g.clone()),
        &FiniteRelation::disjointness(g.clone()),
        None,
        &b,
    )
    .unwrap();
    assert!(report.passes());
    assert!(report
        .intersection
        .same_answers(&FiniteRelation::disjointness(g.clone()))
        .unwrap());

    let discrete = FiniteTopology::discrete(g.clone());
    let report = compatibility_conditions(
        &FiniteRelation::total(g),
        &discrete.relation(),
        Some(&discrete),
        &b,
    )
    .unwrap();
    assert!(report.closures_orthogonal.unwrap().holds);

    let s = sierpinski();
    let report = compatibility_conditions(
        &FiniteRelation::disjointness(s.ground().clone()),
        &s,
        None,
        &b,
    )
    .unwrap();
    assert!(!report.trimming.holds);
    assert_eq!(
        report.trimming.witness,
        Some((PointSet::singleton(0), PointSet::singleton(1)))
    );
    assert!(!report.passes());
}
