//! Gromov products, ends and coarse separation inside graph balls.

use num_rational::Rational64;
use ortho_core::graph::{
    delta_estimate, end_count_over, freudenthal, freudenthal_orth, gromov_product, higson_evidence,
    hyperbolic_orth, GraphBall, GraphGenerator, GraphRule, HigsonEvidence, Vertex,
};

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn idx(ball: &GraphBall, v: Vertex) -> usize {
    ball.index_of(&v).expect("vertex inside the ball")
}

#[test]
fn gromov_product_on_a_path() {
    let path = GraphGenerator::finite(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
    let ball = GraphBall::new(path, 2).unwrap();
    let (a, b, c) = (
        0,
        idx(&ball, Vertex::Index(1)),
        idx(&ball, Vertex::Index(2)),
    );
    assert_eq!(gromov_product(&ball, a, c, b).unwrap(), r(0));
    for x in 0..ball.len() {
        assert_eq!(
            gromov_product(&ball, x, x, a).unwrap(),
            r(ball.distance(x, a).unwrap() as i64)
        );
    }
}

fn common_prefix(u: &[u8], v: &[u8]) -> i64 {
    u.iter().zip(v).take_while(|(x, y)| x == y).count() as i64
}

#[test]
fn gromov_product_in_a_free_group_is_the_common_prefix() {
    let ball = GraphBall::new(GraphGenerator::FreeGroup(2), 4).unwrap();
    let e = idx(&ball, Vertex::Word(vec![]));
    for x in 0..ball.len() {
        for y in 0..ball.len() {
            let (Vertex::Word(u), Vertex::Word(v)) = (ball.vertex(x), ball.vertex(y)) else {
                panic!("free group vertices are words");
            };
            assert_eq!(
                gromov_product(&ball, x, y, e).unwrap(),
                r(common_prefix(u, v))
            );
        }
    }
}

#[test]
fn delta_estimates() {
    let tree = GraphBall::new(GraphGenerator::RegularTree(3), 4).unwrap();
    assert_eq!(delta_estimate(&tree, 0).unwrap().delta, r(0));

    let square = GraphBall::new(GraphGenerator::cycle(4).unwrap(), 2).unwrap();
    let d = delta_estimate(&square, 0).unwrap();
    assert_eq!(d.delta, r(4));
    assert!(d.witness.is_some());

    let mut last = r(0);
    for radius in 3..=6 {
        let grid = GraphBall::new(GraphGenerator::Grid2d, radius).unwrap();
        let d = delta_estimate(&grid, 0).unwrap().delta;
        assert!(d >= last, "radius {radius}: {d} < {last}");
        last = d;
    }
    assert!(last > r(0));
}

#[test]
fn hyperbolic_orthogonality() {
    let ball = GraphBall::new(GraphGenerator::FreeGroup(2), 4).unwrap();
    let e = idx(&ball, Vertex::Word(vec![]));
    let a = ball.select(|v| matches!(v, Vertex::Word(w) if w.first() == Some(&0)));
    let c = ball.select(|v| matches!(v, Vertex::Word(w) if w.first() == Some(&2)));
    let v = hyperbolic_orth(&ball, &a, &c, e, Rational64::new(1, 2)).unwrap();
    assert_eq!(v.sup, r(0));
    assert!(v.orthogonal_at_r);

    let same = hyperbolic_orth(&ball, &a, &a, e, r(2)).unwrap();
    assert_eq!(same.sup, r(4));
    assert!(!same.orthogonal_at_r);

    let line = GraphBall::new(GraphGenerator::Line, 20).unwrap();
    let zero = idx(&line, Vertex::Int(0));
    let pos = line.select(|v| matches!(v, Vertex::Int(n) if *n > 0));
    let neg = line.select(|v| matches!(v, Vertex::Int(n) if *n < 0));
    assert_eq!(
        hyperbolic_orth(&line, &pos, &neg, zero, r(1)).unwrap().sup,
        r(0)
    );
}

#[test]
fn freudenthal_components() {
    let line = GraphBall::new(GraphGenerator::Line, 50).unwrap();
    assert_eq!(freudenthal(&line, 5).unwrap().parts.len(), 2);
    let pos = line.select(|v| matches!(v, Vertex::Int(n) if *n > 0));
    let neg = line.select(|v| matches!(v, Vertex::Int(n) if *n < 0));
    assert!(freudenthal_orth(&line, &pos, &neg, 5).unwrap().separated);
    assert!(GraphRule::Freudenthal { k: 5 }
        .orth(&line, &pos, &neg)
        .unwrap());

    let grid = GraphBall::new(GraphGenerator::Grid2d, 20).unwrap();
    assert_eq!(freudenthal(&grid, 3).unwrap().parts.len(), 1);
    let right = grid.select(|v| matches!(v, Vertex::Pair(x, _) if *x > 0));
    let left = grid.select(|v| matches!(v, Vertex::Pair(x, _) if *x < 0));
    assert!(!freudenthal_orth(&grid, &right, &left, 3).unwrap().separated);
}

#[test]
fn tree_end_counts_double() {
    let tree = GraphBall::new(GraphGenerator::RegularTree(3), 10).unwrap();
    let profile = end_count_over(&tree, 1, 5).unwrap();
    for (k, count) in profile.counts {
        assert_eq!(count, 3 * (1 << (k - 1)), "k = {k}");
    }
}

#[test]
fn higson_evidence_on_the_line() {
    let line = GraphBall::new(GraphGenerator::Line, 30).unwrap();
    let pos = line.select(|v| matches!(v, Vertex::Int(n) if *n > 0));
    let neg = line.select(|v| matches!(v, Vertex::Int(n) if *n < 0));
    assert_eq!(
        higson_evidence(&line, &pos, &neg, 3, 10).unwrap(),
        HigsonEvidence::Separated
    );
    let evens = line.select(|v| matches!(v, Vertex::Int(n) if n % 2 == 0));
    let odds = line.select(|v| matches!(v, Vertex::Int(n) if n % 2 != 0));
    for k in [2, 10, 20] {
        assert_eq!(
            higson_evidence(&line, &evens, &odds, 1, k).unwrap(),
            HigsonEvidence::NotSeparated
        );
    }
    // intersections stopping between radius k and the collar prove nothing
    let near = |n: i64| n.abs() <= 15;
    let short_evens = line.select(|v| matches!(v, Vertex::Int(n) if n % 2 == 0 && near(*n)));
    let short_odds = line.select(|v| matches!(v, Vertex::Int(n) if n % 2 != 0 && near(*n)));
    assert_eq!(
        higson_evidence(&line, &short_evens, &short_odds, 1, 5).unwrap(),
        HigsonEvidence::Inconclusive
    );
    // scales reaching the collar are rejected outright
    assert!(higson_evidence(&line, &pos, &neg, 10, 20).is_err());
}
