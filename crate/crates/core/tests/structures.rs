//! Induced topologies and translations to proximities, neighborhood
//! operators and resemblances.

use ortho_core::line::{ls_orth_metric, EpSet};
use ortho_core::models::{Bornology, FiniteMetric, FiniteTopology};
use ortho_core::relation::{FiniteRelation, OrthTable};
use ortho_core::set::{all_subsets, GroundSet, PointSet};
use ortho_core::topology::{
    closed_variant_topology, induced_topology, is_thickening, perp, thicken_orthogonal, Thickening,
};
use ortho_core::translate::{
    nbhd_to_orth, orth_to_nbhd, orth_to_proximity, proximity_to_orth, resemblance_to_orth,
    sub_operator, FiniteResemblance, LineResemblance, NbhdAxiom,
};
use ortho_core::{Budget, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sierpinski() -> FiniteRelation {
    FiniteTopology::sierpinski().relation()
}

/// `{a} ⊥ {c}` with no spanning decomposition; `b` is orthogonal only to `∅`.
fn not_normal() -> FiniteRelation {
    let table = OrthTable::from_fn(3, |p, q| {
        p.is_empty() || q.is_empty() || (!p.intersects(q) && !p.contains(1) && !q.contains(1))
    })
    .unwrap();
    FiniteRelation::explicit(GroundSet::indexed(3), "not normal", table).unwrap()
}

#[test]
fn perps() {
    let g = GroundSet::indexed(4);
    let b = Bornology::generated(g.clone(), [PointSet::from_indices([0, 1])])
        .unwrap()
        .relation();
    assert_eq!(perp(&b, PointSet::EMPTY), g.full());
    for x in 0..4 {
        assert_eq!(perp(&b, g.full().without(x)), PointSet::singleton(x));
    }
    let s = sierpinski();
    assert_eq!(perp(&s, PointSet::singleton(0)), PointSet::EMPTY);
    assert_eq!(perp(&s, PointSet::singleton(1)), PointSet::EMPTY);
}

#[test]
fn induced_topologies() {
    let b = Budget::default();
    let g = GroundSet::indexed(4);
    let born = Bornology::generated(g.clone(), [PointSet::singleton(2)])
        .unwrap()
        .relation();
    assert!(induced_topology(&born, &b).unwrap().is_discrete());
    assert!(induced_topology(&FiniteRelation::total(g.clone()), &b)
        .unwrap()
        .is_discrete());
    assert!(induced_topology(&sierpinski(), &b).unwrap().is_indiscrete());
}

#[test]
fn closed_variant_topologies() {
    let b = Budget::default();
    let g = GroundSet::indexed(3);
    assert!(
        closed_variant_topology(&FiniteRelation::disjointness(g.clone()), &b)
            .unwrap()
            .is_discrete()
    );
    assert!(closed_variant_topology(&FiniteRelation::total(g), &b)
        .unwrap()
        .is_discrete());
    assert!(closed_variant_topology(&sierpinski(), &b)
        .unwrap()
        .is_indiscrete());
}

#[test]
fn induced_topology_of_a_topological_relation_recovers_t1_spaces() {
    let b = Budget::default();
    let g = GroundSet::indexed(3);
    let rel = FiniteTopology::discrete(g).relation();
    let view = induced_topology(&rel, &b).unwrap();
    assert!(view.same_opens(&closed_variant_topology(&rel, &b).unwrap()));
    assert!(view.to_topology(&rel).unwrap().is_t1());
}

#[test]
fn thickenings() {
    let b = Budget::default();
    let m = FiniteMetric::on_line(&[0.0, 1.0, 3.0, 6.0])
        .unwrap()
        .relation();
    let (c, d) = (PointSet::from_indices([0]), PointSet::from_indices([2, 3]));
    match thicken_orthogonal(&m, c, d, &b).unwrap() {
        Thickening::Found { e, f } => {
            assert!(is_thickening(&m, c, d, e, f));
            // disjointness makes perps complements, so (D, C) works once C ∪ D = X
            let rest = m.full() - c;
            assert!(is_thickening(&m, c, rest, rest, c));
        }
        other => panic!("expected a thickening, got {other:?}"),
    }

    let g = GroundSet::new(["x", "y"]).unwrap();
    let two = FiniteRelation::disjointness(g);
    let (x, y) = (PointSet::singleton(0), PointSet::singleton(1));
    assert!(is_thickening(&two, x, y, y, x));
    assert!(matches!(
        thicken_orthogonal(&two, x, y, &b).unwrap(),
        Thickening::Found { .. }
    ));

    let rel = not_normal();
    match thicken_orthogonal(&rel, PointSet::singleton(0), PointSet::singleton(2), &b).unwrap() {
        Thickening::Absent {
            normality_failure,
            brute_force,
        } => {
            assert!(normality_failure.reproduces(&rel, &b).unwrap());
            // the constructive route is closed, but E = {c}, F = {a} still works
            assert_eq!(
                brute_force,
                Some((PointSet::singleton(2), PointSet::singleton(0)))
            );
            assert!(is_thickening(
                &rel,
                PointSet::singleton(0),
                PointSet::singleton(2),
                PointSet::singleton(2),
                PointSet::singleton(0)
            ));
        }
        other => panic!("expected no thickening, got {other:?}"),
    }
    assert_eq!(thicken_orthogonal(&m, c, c, &b), Err(Error::NotOrthogonal));
}

#[test]
fn proximity_translation() {
    let b = Budget::default();
    let rel = FiniteMetric::on_line(&[0.0, 1.0, 3.0]).unwrap().relation();
    let p = orth_to_proximity(&rel, &b).unwrap();
    assert_eq!(p.check_axioms(), None);
    for a in all_subsets(3) {
        for c in all_subsets(3) {
            assert_eq!(p.near(a, c), a.intersects(c));
        }
    }
    let back = proximity_to_orth(&p).unwrap();
    assert_eq!(back.first_difference(&rel).unwrap(), None);
}

#[test]
fn proximity_translation_needs_a_normal_small_scale_relation() {
    assert!(orth_to_proximity(&not_normal(), &Budget::default()).is_err());
    assert!(orth_to_proximity(
        &FiniteRelation::total(GroundSet::indexed(2)),
        &Budget::default()
    )
    .is_err());
}

#[test]
fn neighborhood_operator_translation() {
    let g = GroundSet::indexed(3);
    let rel = FiniteRelation::disjointness(g.clone());
    let op = orth_to_nbhd(&rel).unwrap();
    for a in all_subsets(3) {
        for u in all_subsets(3) {
            assert_eq!(op.prec(a, u), a.is_subset(u));
        }
    }
    assert_eq!(op.check_axioms(), None);
    assert_eq!(op.check_derived(), None);
    assert!(op.is_normal());
    assert_eq!(
        nbhd_to_orth(&op).unwrap().first_difference(&rel).unwrap(),
        None
    );

    let bad = orth_to_nbhd(&not_normal()).unwrap();
    assert_eq!(bad.check_axioms(), None);
    assert!(!bad.is_normal());
    let (a, c) = bad.normality_failure().unwrap();
    assert!(bad.prec(a, c));
    assert!(!all_subsets(3).any(|m| bad.prec(a, m) && bad.prec(m, c)));
    let _ = NbhdAxiom::N4;
}

#[test]
fn sub_operators() {
    let g = GroundSet::new(["a", "b", "c"]).unwrap();
    let op = orth_to_nbhd(&FiniteRelation::disjointness(g.clone())).unwrap();
    let same = sub_operator(&op, g.full()).unwrap();
    assert_eq!(same.ground(), op.ground());
    for s in all_subsets(3) {
        for t in all_subsets(3) {
            assert_eq!(same.prec(s, t), op.prec(s, t));
        }
    }
    let ab = g.subset(["a", "b"]).unwrap();
    let sub = sub_operator(&op, ab).unwrap();
    assert_eq!(sub.ground().names(), ["a", "b"]);
    assert!(sub.prec(PointSet::singleton(0), PointSet::singleton(0)));
    assert!(!op.sub_relates(ab, PointSet::singleton(2), g.full()));
    assert!(sub_operator(&op, PointSet::EMPTY).is_err());
}

#[test]
fn finite_resemblances() {
    let b = Budget::default();
    let g = GroundSet::indexed(3);
    let total = resemblance_to_orth(&FiniteResemblance::total(g.clone()), &b).unwrap();
    assert!(total
        .same_answers(&FiniteRelation::total(g.clone()))
        .unwrap());
    let err = resemblance_to_orth(&FiniteResemblance::equality(g), &b).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
}

#[test]
fn hausdorff_resemblance_matches_the_metric_rule() {
    let lam = LineResemblance::hausdorff();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let sets: Vec<EpSet> = (0..60).map(|_| EpSet::random(&mut rng, 6, 30)).collect();
    for a in &sets {
        for c in &sets {
            assert_eq!(lam.orth(a, c), ls_orth_metric(a, c), "{a:?} {c:?}");
        }
    }
    assert!(lam.orth(&EpSet::naturals(), &EpSet::negative_naturals()));
    assert_eq!(lam.check_axioms_sampled(&sets, 500, 3), None);
}
