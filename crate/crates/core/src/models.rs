//! Relations built from bornologies, finite topologies, finite metrics and
//! embedded topological pairs.

use crate::relation::{DotProduct, FiniteRelation};
use crate::set::{all_subsets, expand, GroundSet, PointSet};
use crate::{Error, Result};

/// A bornology on a finite set: closed under subsets and finite unions.
///
/// On a finite set every such (nonempty) family is the power set of its
/// union, which is what is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bornology {
    ground: GroundSet,
    union: PointSet,
}

impl Bornology {
    /// Validates `members` as a bornology, naming the first violation.
    pub fn new(ground: GroundSet, members: &[PointSet]) -> Result<Bornology> {
        if members.is_empty() {
            return Err(Error::invalid("a bornology needs at least one member"));
        }
        for m in members {
            m.check_within(ground.len())?;
        }
        let has = |s: PointSet| members.contains(&s);
        for &a in members {
            if let Some(sub) = a.subsets().find(|&s| !has(s)) {
                return Err(Error::invalid(format!(
                    "bornology not closed under subsets: {} ⊆ {} is missing",
                    ground.format(sub),
                    ground.format(a)
                )));
            }
            if let Some(&b) = members.iter().find(|&&b| !has(a | b)) {
                return Err(Error::invalid(format!(
                    "bornology not closed under unions: {} ∪ {} is missing",
                    ground.format(a),
                    ground.format(b)
                )));
            }
        }
        let union = members.iter().fold(PointSet::EMPTY, |acc, &m| acc | m);
        Ok(Bornology { ground, union })
    }

    /// The smallest bornology containing `generators` (and `∅`).
    pub fn generated(
        ground: GroundSet,
        generators: impl IntoIterator<Item = PointSet>,
    ) -> Result<Bornology> {
        let mut union = PointSet::EMPTY;
        for g in generators {
            g.check_within(ground.len())?;
            union = union | g;
        }
        Ok(Bornology { ground, union })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn contains(&self, s: PointSet) -> bool {
        s.is_subset(self.union)
    }

    /// All members in increasing mask order.
    pub fn members(&self) -> Vec<PointSet> {
        self.union.subsets().collect()
    }

    /// The largest member.
    pub fn top(&self) -> PointSet {
        self.union
    }

    /// The rule `A ⊥ C ⟺ A ∩ C ∈ B`, evaluated directly.
    pub fn rule(&self, a: PointSet, c: PointSet) -> bool {
        self.contains(a & c)
    }

    /// Pair-generated relation with `x ⊥ y ⟺ {x} ∩ {y} ∈ B`.
    pub fn relation(&self) -> FiniteRelation {
        FiniteRelation::from_pair_fn(self.ground.clone(), "bornology", |x, y| {
            self.rule(PointSet::singleton(x), PointSet::singleton(y))
        })
    }
}

/// A topology on a finite set, given by its open sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    ground: GroundSet,
    opens: Vec<PointSet>,
    point_closures: Vec<PointSet>,
}

impl FiniteTopology {
    /// Validates the open family: contains `∅` and `X`, closed under union
    /// and intersection.
    pub fn new(
        ground: GroundSet,
        opens: impl IntoIterator<Item = PointSet>,
    ) -> Result<FiniteTopology> {
        let n = ground.len();
        let mut opens: Vec<PointSet> = opens.into_iter().collect();
        for o in &opens {
            o.check_within(n)?;
        }
        opens.sort();
        opens.dedup();
        let full = PointSet::full(n);
        for required in [PointSet::EMPTY, full] {
            if opens.binary_search(&required).is_err() {
                return Err(Error::invalid(format!(
                    "open sets must include {}",
                    ground.format(required)
                )));
            }
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                for (op, w) in [("union", u | v), ("intersection", u & v)] {
                    if opens.binary_search(&w).is_err() {
                        return Err(Error::invalid(format!(
                            "open sets not closed under {op}: {} and {}",
                            ground.format(u),
                            ground.format(v)
                        )));
                    }
                }
            }
        }
        Ok(FiniteTopology::from_sorted(ground, opens))
    }

    fn from_sorted(ground: GroundSet, opens: Vec<PointSet>) -> FiniteTopology {
        let n = ground.len();
        let full = PointSet::full(n);
        let closure = |s: PointSet| {
            let outside = opens
                .iter()
                .filter(|o| !o.intersects(s))
                .fold(PointSet::EMPTY, |acc, &o| acc | o);
            full - outside
        };
        let point_closures = (0..n).map(|x| closure(PointSet::singleton(x))).collect();
        FiniteTopology {
            ground,
            opens,
            point_closures,
        }
    }

    /// The topology whose smallest open neighbourhoods are `min_opens`:
    /// `min_opens[x]` contains `x` and contains `min_opens[y]` for each of its
    /// points `y`.
    pub fn from_min_opens(ground: GroundSet, min_opens: &[PointSet]) -> Result<FiniteTopology> {
        let n = ground.len();
        if min_opens.len() != n {
            return Err(Error::invalid(format!(
                "{} neighbourhoods for {n} points",
                min_opens.len()
            )));
        }
        for (x, &u) in min_opens.iter().enumerate() {
            u.check_within(n)?;
            if !u.contains(x) || u.iter().any(|y| !min_opens[y].is_subset(u)) {
                return Err(Error::invalid(format!(
                    "{} is not a smallest neighbourhood of {}",
                    ground.format(u),
                    ground.name(x)
                )));
            }
        }
        if n > 20 {
            return Err(Error::budget("topology points", n, 20));
        }
        let opens = all_subsets(n)
            .filter(|s| s.iter().all(|x| min_opens[x].is_subset(*s)))
            .collect();
        Ok(FiniteTopology::from_sorted(ground, opens))
    }

    pub fn discrete(ground: GroundSet) -> FiniteTopology {
        let opens = all_subsets(ground.len()).collect();
        FiniteTopology::from_sorted(ground, opens)
    }

    pub fn indiscrete(ground: GroundSet) -> FiniteTopology {
        let full = ground.full();
        let mut opens = vec![PointSet::EMPTY, full];
        opens.dedup();
        FiniteTopology::from_sorted(ground, opens)
    }

    /// Two points `a, b` with opens `∅, {a}, X`.
    pub fn sierpinski() -> FiniteTopology {
        let ground = GroundSet::new(["a", "b"]).expect("distinct names");
        FiniteTopology::from_sorted(ground, vec![PointSet(0b00), PointSet(0b01), PointSet(0b11)])
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(s.complement(self.n()))
    }

    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut closed: Vec<PointSet> = self.opens.iter().map(|o| o.complement(self.n())).collect();
        closed.sort();
        closed
    }

    /// Smallest closed superset; closure distributes over finite unions.
    pub fn closure(&self, s: PointSet) -> PointSet {
        s.iter()
            .fold(PointSet::EMPTY, |acc, x| acc | self.point_closures[x])
    }

    /// Smallest open set containing `x`.
    pub fn min_open(&self, x: usize) -> PointSet {
        PointSet::from_indices((0..self.n()).filter(|&y| self.point_closures[y].contains(x)))
    }

    /// Pair-generated relation `x ⊥ y ⟺ cl{x} ∩ cl{y} = ∅`.
    pub fn relation(&self) -> FiniteRelation {
        FiniteRelation::from_pair_fn(self.ground.clone(), "topology", |x, y| {
            !self.point_closures[x].intersects(self.point_closures[y])
        })
    }

    pub fn is_t1(&self) -> bool {
        (0..self.n()).all(|x| self.point_closures[x] == PointSet::singleton(x))
    }

    /// Whether disjoint open sets separate `a` from `b`.
    fn opens_separate(&self, a: PointSet, b: PointSet) -> bool {
        // the smallest open neighbourhoods are the best candidates
        let nbhd = |s: PointSet| {
            s.iter()
                .fold(PointSet::EMPTY, |acc, x| acc | self.min_open(x))
        };
        !nbhd(a).intersects(nbhd(b))
    }

    /// T2: distinct points have disjoint neighbourhoods.
    pub fn is_hausdorff(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| {
            (0..n).all(|y| {
                x == y || self.opens_separate(PointSet::singleton(x), PointSet::singleton(y))
            })
        })
    }

    /// T3 in the convention that includes T1.
    pub fn is_regular(&self) -> bool {
        self.is_t1()
            && self.closed_sets().into_iter().all(|f| {
                (0..self.n())
                    .all(|x| f.contains(x) || self.opens_separate(PointSet::singleton(x), f))
            })
    }

    /// T4 in the convention that includes T1.
    pub fn is_normal(&self) -> bool {
        let closed = self.closed_sets();
        self.is_t1()
            && closed.iter().all(|&f| {
                closed
                    .iter()
                    .all(|&g| f.intersects(g) || self.opens_separate(f, g))
            })
    }
}

/// `C · D = cl(C) ∩ cl(D)`.
pub struct ClosureDot<'a>(pub &'a FiniteTopology);

impl DotProduct for ClosureDot<'_> {
    fn points(&self) -> usize {
        self.0.n()
    }

    fn dot(&self, c: PointSet, d: PointSet) -> PointSet {
        self.0.closure(c) & self.0.closure(d)
    }
}

/// A finite metric with zero diagonal, positive off-diagonal entries and the
/// triangle inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetric {
    ground: GroundSet,
    d: Vec<Vec<f64>>,
}

const METRIC_TOLERANCE: f64 = 1e-9;

impl FiniteMetric {
    pub fn new(ground: GroundSet, d: Vec<Vec<f64>>) -> Result<FiniteMetric> {
        let n = ground.len();
        if d.len() != n || d.iter().any(|row| row.len() != n) {
            return Err(Error::invalid(format!("distance matrix must be {n}×{n}")));
        }
        let name = |i: usize| ground.name(i).to_string();
        for x in 0..n {
            for y in 0..n {
                let v = d[x][y];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::invalid(format!(
                        "d({}, {}) = {v} is not a nonnegative number",
                        name(x),
                        name(y)
                    )));
                }
                if (x == y) != (v == 0.0) {
                    return Err(Error::invalid(format!(
                        "d({}, {}) = {v}: distance is zero exactly on the diagonal",
                        name(x),
                        name(y)
                    )));
                }
                if (v - d[y][x]).abs() > METRIC_TOLERANCE {
                    return Err(Error::invalid(format!(
                        "distance matrix not symmetric at ({}, {})",
                        name(x),
                        name(y)
                    )));
                }
                for z in 0..n {
                    if d[x][z] > d[x][y] + d[y][z] + METRIC_TOLERANCE {
                        return Err(Error::invalid(format!(
                            "triangle inequality fails for ({}, {}, {})",
                            name(x),
                            name(y),
                            name(z)
                        )));
                    }
                }
            }
        }
        Ok(FiniteMetric { ground, d })
    }

    /// Points of the real line with the absolute-value distance.
    pub fn on_line(points: &[f64]) -> Result<FiniteMetric> {
        let ground = GroundSet::new(points.iter().map(|p| format!("{p}")))?;
        let d = points
            .iter()
            .map(|p| points.iter().map(|q| (p - q).abs()).collect())
            .collect();
        FiniteMetric::new(ground, d)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn distance(&self, x: usize, y: usize) -> f64 {
        self.d[x][y]
    }

    /// Smallest distance between the two sets (`None` if either is empty).
    pub fn set_distance(&self, a: PointSet, c: PointSet) -> Option<f64> {
        a.iter()
            .flat_map(|x| c.iter().map(move |y| (x, y)))
            .map(|(x, y)| self.d[x][y])
            .min_by(f64::total_cmp)
    }

    /// Radius whose closed balls around `a` and `c` are disjoint: a third
    /// of the distance between the sets. `None` when the sets meet or one of
    /// them is empty (empty sets are orthogonal at every radius).
    pub fn ball_witness(&self, a: PointSet, c: PointSet) -> Option<f64> {
        self.set_distance(a, c)
            .filter(|&m| m > 0.0)
            .map(|m| m / 3.0)
    }

    /// Pair-generated relation: on a finite space some radius separates any
    /// two disjoint sets, so the relation is disjointness.
    pub fn relation(&self) -> FiniteRelation {
        FiniteRelation::from_pair_fn(self.ground.clone(), "metric", |x, y| self.d[x][y] > 0.0)
    }
}

/// A subset `X` of a finite topological space `X̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedPair {
    ambient: FiniteTopology,
    inner: PointSet,
}

impl EmbeddedPair {
    pub fn new(ambient: FiniteTopology, inner: PointSet) -> Result<EmbeddedPair> {
        inner.check_within(ambient.n())?;
        if inner.is_empty() {
            return Err(Error::invalid("the embedded set must be nonempty"));
        }
        Ok(EmbeddedPair { ambient, inner })
    }

    pub fn ambient(&self) -> &FiniteTopology {
        &self.ambient
    }

    pub fn inner(&self) -> PointSet {
        self.inner
    }

    /// `X̄ ∖ X`.
    pub fn corona(&self) -> PointSet {
        self.ambient.ground().full() - self.inner
    }

    pub fn inner_ground(&self) -> GroundSet {
        self.ambient.ground().restrict(self.inner)
    }

    /// Closure in `X̄` of a subset of `X` given in `X`'s own indexing.
    pub fn closure_of(&self, s: PointSet) -> PointSet {
        self.ambient.closure(expand(s, self.inner))
    }

    /// Small-scale relation (closures disjoint) and large-scale relation
    /// (closures disjoint on the corona), both on `X`.
    pub fn relations(&self) -> (FiniteRelation, FiniteRelation) {
        let g = self.inner_ground();
        let cl: Vec<PointSet> = (0..g.len())
            .map(|x| self.closure_of(PointSet::singleton(x)))
            .collect();
        let corona = self.corona();
        let ss = FiniteRelation::from_pair_fn(g.clone(), "embedded small scale", |x, y| {
            !cl[x].intersects(cl[y])
        });
        let ls = FiniteRelation::from_pair_fn(g, "embedded large scale", |x, y| {
            !(cl[x] & cl[y]).intersects(corona)
        });
        (ss, ls)
    }
}

/// `C · D = cl(C) ∩ cl(D) ∖ X` for subsets of `X`, closures taken in `X̄`.
pub struct CoronaDot<'a>(pub &'a EmbeddedPair);

impl DotProduct for CoronaDot<'_> {
    fn points(&self) -> usize {
        self.0.inner().len()
    }

    fn dot(&self, c: PointSet, d: PointSet) -> PointSet {
        self.0.closure_of(c) & self.0.closure_of(d) & self.0.corona()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::{check_dot_axioms, from_dot, ScaleClass};

    #[test]
    fn bornology_validation_names_violations() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let err = Bornology::new(g.clone(), &[PointSet(0b00), PointSet(0b11)]).unwrap_err();
        assert!(err.to_string().contains("subsets"), "{err}");
        let err = Bornology::new(g.clone(), &[PointSet(0), PointSet(1), PointSet(2)]).unwrap_err();
        assert!(err.to_string().contains("unions"), "{err}");
        assert!(Bornology::new(g, &[]).is_err());
    }

    #[test]
    fn bornology_relations() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let trivial = Bornology::new(g.clone(), &[PointSet::EMPTY])
            .unwrap()
            .relation();
        assert!(trivial
            .same_answers(&FiniteRelation::disjointness(g.clone()))
            .unwrap());
        let all = Bornology::generated(g.clone(), [g.full()])
            .unwrap()
            .relation();
        assert_eq!(all.scale_class(), ScaleClass::Large);
        let a = Bornology::generated(g.clone(), [g.subset(["a"]).unwrap()])
            .unwrap()
            .relation();
        assert!(a.point_orth(0, 0));
        assert!(!a.point_orth(1, 1));
    }

    #[test]
    fn topology_validation() {
        let g = GroundSet::indexed(2);
        assert!(FiniteTopology::new(g.clone(), [PointSet(0), PointSet(1)]).is_err());
        assert!(FiniteTopology::new(
            g.clone(),
            [PointSet(0), PointSet(1), PointSet(2), PointSet(3)]
        )
        .is_ok());
        let g3 = GroundSet::indexed(3);
        let err = FiniteTopology::new(g3, [PointSet(0), PointSet(1), PointSet(2), PointSet(7)])
            .unwrap_err();
        assert!(err.to_string().contains("union"), "{err}");
    }

    #[test]
    fn topological_relations() {
        let d = FiniteTopology::discrete(GroundSet::indexed(3));
        assert!(d
            .relation()
            .same_answers(&FiniteRelation::disjointness(GroundSet::indexed(3)))
            .unwrap());
        for t in [
            FiniteTopology::sierpinski(),
            FiniteTopology::indiscrete(GroundSet::indexed(2)),
        ] {
            let r = t.relation();
            assert!(!r.point_orth(0, 1) && !r.point_orth(0, 0) && !r.point_orth(1, 1));
        }
        let s = FiniteTopology::sierpinski();
        assert_eq!(s.closure(PointSet(0b01)), PointSet(0b11));
        assert_eq!(s.closure(PointSet(0b10)), PointSet(0b10));
    }

    #[test]
    fn closure_dot_matches_relation() {
        let s = FiniteTopology::sierpinski();
        let rel = from_dot(&ClosureDot(&s), s.ground().clone(), "dot").unwrap();
        assert!(rel.same_answers(&s.relation()).unwrap());
        assert_eq!(check_dot_axioms(&ClosureDot(&s)).unwrap(), None);
    }

    #[test]
    fn metric_validation_and_witness() {
        assert!(
            FiniteMetric::new(GroundSet::indexed(2), vec![vec![0.0, 1.0], vec![2.0, 0.0]]).is_err()
        );
        let bad_triangle = vec![
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 1.0],
            vec![5.0, 1.0, 0.0],
        ];
        assert!(FiniteMetric::new(GroundSet::indexed(3), bad_triangle).is_err());
        let m = FiniteMetric::on_line(&[0.0, 1.0, 3.0]).unwrap();
        let rel = m.relation();
        assert!(rel.orth(PointSet(0b001), PointSet(0b110)));
        assert!(
            (m.ball_witness(PointSet(0b001), PointSet(0b110)).unwrap() - 1.0 / 3.0).abs() < 1e-12
        );
        assert!(!rel.point_orth(1, 1));
    }

    #[test]
    fn embedded_pairs() {
        let g = GroundSet::indexed(3);
        let discrete = FiniteTopology::discrete(g.clone());
        let whole = EmbeddedPair::new(discrete.clone(), g.full()).unwrap();
        let (_, ls) = whole.relations();
        assert_eq!(ls.scale_class(), ScaleClass::Large);
        let minus_one = EmbeddedPair::new(discrete, PointSet(0b011)).unwrap();
        let (ss, ls) = minus_one.relations();
        assert!(ss
            .same_answers(&FiniteRelation::disjointness(GroundSet::indexed(2)).with_provenance("x"))
            .unwrap());
        assert!(ls
            .same_answers(&FiniteRelation::total(ls.ground().clone()))
            .unwrap());
        // corona point z lies in the closure of every point
        let t = FiniteTopology::new(
            g,
            [
                PointSet(0),
                PointSet(0b001),
                PointSet(0b010),
                PointSet(0b011),
                PointSet(0b111),
            ],
        )
        .unwrap();
        let p = EmbeddedPair::new(t, PointSet(0b011)).unwrap();
        let (_, ls) = p.relations();
        assert!(!ls.point_orth(0, 1) && !ls.point_orth(0, 0));
        assert!(EmbeddedPair::new(FiniteTopology::sierpinski(), PointSet::EMPTY).is_err());
    }

    #[test]
    fn topological_separation_on_small_spaces() {
        let s = FiniteTopology::sierpinski();
        assert!(!s.is_t1() && !s.is_hausdorff() && !s.is_regular() && !s.is_normal());
        let d = FiniteTopology::discrete(GroundSet::indexed(3));
        assert!(d.is_hausdorff() && d.is_regular() && d.is_normal());
    }
}
