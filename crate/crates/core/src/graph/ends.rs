//! Components outside inner balls: Freudenthal separation, end counts and
//! finite-scale Higson evidence.

use petgraph::unionfind::UnionFind;

use super::{GraphBall, VertexSet};
use crate::{Error, Result};

/// Connected components of `ball ∖ K`, `K` the vertices at distance `< k`
/// from the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub k: u32,
    pub parts: Vec<VertexSet>,
}

impl Components {
    /// Index of the component containing vertex `v`, if any.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    /// Components meeting the outer sphere of the ball.
    pub fn reaching(&self, sphere: &VertexSet) -> usize {
        self.parts.iter().filter(|p| p.intersects(sphere)).count()
    }
}

pub fn freudenthal(ball: &GraphBall, k: u32) -> Result<Components> {
    if k >= ball.radius() {
        return Err(Error::pre(format!(
            "k = {k} must be below the ball radius {}",
            ball.radius()
        )));
    }
    let n = ball.len();
    let outside = ball.all_vertices().difference(&ball.inner_ball(k));
    let mut uf = UnionFind::<usize>::new(n);
    for u in outside.iter() {
        for &w in ball.neighbors(u) {
            if outside.contains(w) {
                uf.union(u, w);
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut parts: Vec<VertexSet> = Vec::new();
    for u in outside.iter() {
        let r = uf.find(u);
        match roots.iter().position(|&x| x == r) {
            Some(i) => parts[i].insert(u),
            None => {
                roots.push(r);
                parts.push(VertexSet::from_indices(n, [u]));
            }
        }
    }
    Ok(Components { k, parts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreudenthalVerdict {
    /// No component outside `K` meets both sets.
    pub separated: bool,
    /// `A` or `C` lies inside `K`, so separation holds vacuously.
    pub vacuous: bool,
}

pub fn freudenthal_orth(
    ball: &GraphBall,
    a: &VertexSet,
    c: &VertexSet,
    k: u32,
) -> Result<FreudenthalVerdict> {
    ball.check_vertices(a)?;
    ball.check_vertices(c)?;
    let comps = freudenthal(ball, k)?;
    let inner = ball.inner_ball(k);
    let vacuous = a.difference(&inner).is_empty() || c.difference(&inner).is_empty();
    let separated = !comps
        .parts
        .iter()
        .any(|p| p.intersects(a) && p.intersects(c));
    Ok(FreudenthalVerdict { separated, vacuous })
}

/// Per-`k` counts of components reaching the outer sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndProfile {
    pub counts: Vec<(u32, usize)>,
    /// The count is constant over the top half of the `k` range.
    pub stabilized: bool,
}

impl EndProfile {
    pub fn stable_value(&self) -> Option<usize> {
        self.stabilized
            .then(|| self.counts.last().map(|&(_, c)| c))
            .flatten()
    }

    /// `k` values forming the stabilized suffix.
    pub fn stable_range(&self) -> Option<(u32, u32)> {
        let last = self.counts.last()?;
        let first = self
            .counts
            .iter()
            .rev()
            .take_while(|(_, c)| *c == last.1)
            .last()?;
        self.stabilized.then_some((first.0, last.0))
    }
}

/// End counts for `k = 1 ..= R/2`.
pub fn end_count(ball: &GraphBall) -> Result<EndProfile> {
    let top = ball.radius() / 2;
    if top < 1 {
        return Err(Error::pre("end counting needs a ball radius of at least 2"));
    }
    end_count_over(ball, 1, top)
}

pub fn end_count_over(ball: &GraphBall, k_min: u32, k_max: u32) -> Result<EndProfile> {
    if k_min > k_max {
        return Err(Error::pre(format!("empty k range {k_min}..={k_max}")));
    }
    let sphere = ball.sphere(ball.radius());
    let mut counts = Vec::new();
    for k in k_min..=k_max {
        counts.push((k, freudenthal(ball, k)?.reaching(&sphere)));
    }
    let half = counts.len() / 2;
    let stabilized = counts[half..]
        .iter()
        .all(|&(_, c)| c == counts[counts.len() - 1].1);
    Ok(EndProfile { counts, stabilized })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HigsonEvidence {
    /// The dilations meet only within distance `k` of the origin.
    Separated,
    /// The dilations meet in the outer collar of the ball.
    NotSeparated,
    Inconclusive,
}

/// Intersects the `r`-dilations of `A` and `C` inside the ball; the collar
/// is the vertices at distance `>= R - r`.
pub fn higson_evidence(
    ball: &GraphBall,
    a: &VertexSet,
    c: &VertexSet,
    r: u32,
    k: u32,
) -> Result<HigsonEvidence> {
    ball.check_vertices(a)?;
    ball.check_vertices(c)?;
    if r + k >= ball.radius() {
        return Err(Error::pre(format!(
            "scales r = {r}, k = {k} need r + k below the ball radius {}",
            ball.radius()
        )));
    }
    let meet = ball.dilate(a, r).intersection(&ball.dilate(c, r));
    if meet.iter().all(|v| ball.depth(v) <= k) {
        return Ok(HigsonEvidence::Separated);
    }
    if meet.iter().any(|v| ball.depth(v) >= ball.radius() - r) {
        return Ok(HigsonEvidence::NotSeparated);
    }
    Ok(HigsonEvidence::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::super::{GraphGenerator, Vertex};
    use super::*;

    fn int_set(ball: &GraphBall, pred: impl Fn(i64) -> bool) -> VertexSet {
        ball.select(|v| matches!(v, Vertex::Int(n) if pred(*n)))
    }

    #[test]
    fn line_has_two_components() {
        let ball = GraphBall::new(GraphGenerator::Line, 50).unwrap();
        assert_eq!(freudenthal(&ball, 5).unwrap().parts.len(), 2);
        let pos = int_set(&ball, |n| n > 0);
        let neg = int_set(&ball, |n| n < 0);
        let v = freudenthal_orth(&ball, &pos, &neg, 5).unwrap();
        assert!(v.separated && !v.vacuous);
        let p = end_count(&ball).unwrap();
        assert_eq!(p.stable_value(), Some(2));
        assert_eq!(p.stable_range(), Some((1, 25)));
    }

    #[test]
    fn grid_annulus_is_connected() {
        let ball = GraphBall::new(GraphGenerator::Grid2d, 20).unwrap();
        let comps = freudenthal(&ball, 3).unwrap();
        assert_eq!(comps.reaching(&ball.sphere(20)), 1);
        let right = ball.select(|v| matches!(v, Vertex::Pair(x, _) if *x > 0));
        let left = ball.select(|v| matches!(v, Vertex::Pair(x, _) if *x < 0));
        assert!(!freudenthal_orth(&ball, &right, &left, 3).unwrap().separated);
        assert_eq!(end_count(&ball).unwrap().stable_value(), Some(1));
    }

    #[test]
    fn tree_census() {
        let ball = GraphBall::new(GraphGenerator::RegularTree(3), 10).unwrap();
        let p = end_count_over(&ball, 1, 5).unwrap();
        for (k, c) in p.counts {
            assert_eq!(c, 3 << (k - 1));
        }
    }

    #[test]
    fn vacuous_separation_is_flagged() {
        let ball = GraphBall::new(GraphGenerator::Line, 10).unwrap();
        let small = int_set(&ball, |n| n.abs() < 2);
        let v = freudenthal_orth(&ball, &small, &ball.all_vertices(), 3).unwrap();
        assert!(v.vacuous && v.separated);
        assert!(freudenthal(&ball, 10).is_err());
    }

    #[test]
    fn higson_examples() {
        let ball = GraphBall::new(GraphGenerator::Line, 50).unwrap();
        let pos = int_set(&ball, |n| n > 0);
        let neg = int_set(&ball, |n| n < 0);
        assert_eq!(
            higson_evidence(&ball, &pos, &neg, 3, 10).unwrap(),
            HigsonEvidence::Separated
        );
        let ev = int_set(&ball, |n| n % 2 == 0);
        let od = int_set(&ball, |n| n % 2 != 0);
        assert_eq!(
            higson_evidence(&ball, &ev, &od, 1, 10).unwrap(),
            HigsonEvidence::NotSeparated
        );
        let lone = int_set(&ball, |n| n == 30);
        assert_eq!(
            higson_evidence(&ball, &lone, &lone, 2, 10).unwrap(),
            HigsonEvidence::Inconclusive
        );
        assert!(higson_evidence(&ball, &pos, &neg, 20, 30).is_err());
    }
}
