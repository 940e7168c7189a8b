//! Relations on finite ground sets.

use std::fmt;

use crate::set::{all_subsets, expand, GroundSet, PointSet};
use crate::{Error, Result};

/// Largest ground set an explicit table can hold (`4^8` bits).
pub const MAX_TABLE_POINTS: usize = 8;

/// Symmetric point-orthogonality matrix: `rows[x]` is the set of `y` with
/// `{x} ⊥ {y}`.
#[derive(Clone, PartialEq, Eq)]
pub struct PairMatrix {
    rows: Vec<PointSet>,
}

impl PairMatrix {
    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    pub fn row(&self, x: usize) -> PointSet {
        self.rows[x]
    }
}

impl fmt::Debug for PairMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

/// One bit per ordered pair of subsets, indexed by `(a << n) | c`.
#[derive(Clone, PartialEq, Eq)]
pub struct OrthTable {
    n: usize,
    bits: Vec<u64>,
}

impl OrthTable {
    /// Tabulates `pred` over every ordered pair of subsets of `{0, .., n-1}`.
    pub fn from_fn(
        n: usize,
        mut pred: impl FnMut(PointSet, PointSet) -> bool,
    ) -> Result<OrthTable> {
        if n > MAX_TABLE_POINTS {
            return Err(Error::budget("explicit table points", n, MAX_TABLE_POINTS));
        }
        let size = 1usize << (2 * n);
        let mut bits = vec![0u64; size.div_ceil(64)];
        for a in all_subsets(n) {
            for c in all_subsets(n) {
                if pred(a, c) {
                    let i = (a.0 as usize) << n | c.0 as usize;
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
        }
        Ok(OrthTable { n, bits })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    fn index(&self, a: PointSet, c: PointSet) -> usize {
        (a.0 as usize) << self.n | c.0 as usize
    }

    pub fn get(&self, a: PointSet, c: PointSet) -> bool {
        let i = self.index(a, c);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, a: PointSet, c: PointSet, value: bool) {
        let i = self.index(a, c);
        if value {
            self.bits[i / 64] |= 1 << (i % 64);
        } else {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Flips `(a, c)` and `(c, a)` together, keeping the table symmetric.
    pub fn flip_symmetric(&mut self, a: PointSet, c: PointSet) {
        let v = !self.get(a, c);
        self.set(a, c, v);
        self.set(c, a, v);
    }
}

impl fmt::Debug for OrthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrthTable(n={}, {} orthogonal pairs)", self.n, {
            self.bits.iter().map(|w| w.count_ones()).sum::<u32>()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteBackend {
    /// `A ⊥ C` iff one side is empty or every point pair is orthogonal.
    Pairs(PairMatrix),
    /// Arbitrary table over all subset pairs.
    Table(OrthTable),
}

/// An orthogonality relation (or a candidate for one) on a finite ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRelation {
    ground: GroundSet,
    backend: FiniteBackend,
    provenance: String,
}

/// Classification by self-orthogonality and bounded points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScaleClass {
    Small,
    Large,
    Neither,
}

impl fmt::Display for ScaleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScaleClass::Small => "small",
            ScaleClass::Large => "large",
            ScaleClass::Neither => "neither",
        })
    }
}

impl FiniteRelation {
    /// Pair-generated relation from a point predicate. The predicate is
    /// evaluated on `x <= y` only and mirrored.
    pub fn from_pair_fn(
        ground: GroundSet,
        provenance: impl Into<String>,
        mut pred: impl FnMut(usize, usize) -> bool,
    ) -> FiniteRelation {
        let n = ground.len();
        let mut rows = vec![PointSet::EMPTY; n];
        for x in 0..n {
            for y in x..n {
                if pred(x, y) {
                    rows[x] = rows[x].with(y);
                    rows[y] = rows[y].with(x);
                }
            }
        }
        FiniteRelation {
            ground,
            backend: FiniteBackend::Pairs(PairMatrix { rows }),
            provenance: provenance.into(),
        }
    }

    /// Pair-generated relation from explicit rows; rejects asymmetric rows.
    pub fn from_rows(
        ground: GroundSet,
        provenance: impl Into<String>,
        rows: Vec<PointSet>,
    ) -> Result<FiniteRelation> {
        let n = ground.len();
        if rows.len() != n {
            return Err(Error::GroundSizeMismatch {
                left: n,
                right: rows.len(),
            });
        }
        for (x, row) in rows.iter().enumerate() {
            row.check_within(n)?;
            if let Some(y) = row.iter().find(|&y| !rows[y].contains(x)) {
                return Err(Error::invalid(format!(
                    "pair matrix is not symmetric at ({}, {})",
                    ground.name(x),
                    ground.name(y)
                )));
            }
        }
        Ok(FiniteRelation {
            ground,
            backend: FiniteBackend::Pairs(PairMatrix { rows }),
            provenance: provenance.into(),
        })
    }

    /// Explicit-table relation; the table must be symmetric and relate `∅`
    /// to everything.
    pub fn explicit(
        ground: GroundSet,
        provenance: impl Into<String>,
        table: OrthTable,
    ) -> Result<FiniteRelation> {
        let rel = FiniteRelation::explicit_raw(ground, provenance, table)?;
        let n = rel.n();
        for a in all_subsets(n) {
            if !rel.orth(PointSet::EMPTY, a) || !rel.orth(a, PointSet::EMPTY) {
                return Err(Error::invalid(format!(
                    "explicit table does not relate the empty set to {}",
                    rel.ground.format(a)
                )));
            }
            for c in all_subsets(n) {
                if c > a {
                    break;
                }
                if rel.orth(a, c) != rel.orth(c, a) {
                    return Err(Error::invalid(format!(
                        "explicit table is not symmetric at ({}, {})",
                        rel.ground.format(a),
                        rel.ground.format(c)
                    )));
                }
            }
        }
        Ok(rel)
    }

    /// Explicit-table relation with no well-formedness checks, for feeding
    /// malformed candidates to the axiom checker.
    pub fn explicit_raw(
        ground: GroundSet,
        provenance: impl Into<String>,
        table: OrthTable,
    ) -> Result<FiniteRelation> {
        if table.points() != ground.len() {
            return Err(Error::GroundSizeMismatch {
                left: ground.len(),
                right: table.points(),
            });
        }
        Ok(FiniteRelation {
            ground,
            backend: FiniteBackend::Table(table),
            provenance: provenance.into(),
        })
    }

    /// The relation in which every pair of subsets is orthogonal.
    pub fn total(ground: GroundSet) -> FiniteRelation {
        FiniteRelation::from_pair_fn(ground, "total", |_, _| true)
    }

    /// `A ⊥ C` iff `A ∩ C = ∅`.
    pub fn disjointness(ground: GroundSet) -> FiniteRelation {
        FiniteRelation::from_pair_fn(ground, "disjointness", |x, y| x != y)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> PointSet {
        self.ground.full()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> FiniteRelation {
        self.provenance = provenance.into();
        self
    }

    pub fn backend(&self) -> &FiniteBackend {
        &self.backend
    }

    pub fn is_pair_generated(&self) -> bool {
        matches!(self.backend, FiniteBackend::Pairs(_))
    }

    /// Whether `a ⊥ c`. Both masks must lie inside the ground set.
    pub fn orth(&self, a: PointSet, c: PointSet) -> bool {
        debug_assert!(a.check_within(self.n()).is_ok() && c.check_within(self.n()).is_ok());
        match &self.backend {
            FiniteBackend::Pairs(m) => a.iter().all(|x| c.is_subset(m.rows[x])),
            FiniteBackend::Table(t) => t.get(a, c),
        }
    }

    /// [`orth`](Self::orth) with ground-set validation.
    pub fn try_orth(&self, a: PointSet, c: PointSet) -> Result<bool> {
        a.check_within(self.n())?;
        c.check_within(self.n())?;
        Ok(self.orth(a, c))
    }

    pub fn point_orth(&self, x: usize, y: usize) -> bool {
        self.orth(PointSet::singleton(x), PointSet::singleton(y))
    }

    pub fn is_bounded(&self, b: PointSet) -> bool {
        self.orth(b, self.full())
    }

    /// Points forming bounded singletons.
    pub fn bounded_points(&self) -> PointSet {
        PointSet::from_indices((0..self.n()).filter(|&x| self.is_bounded(PointSet::singleton(x))))
    }

    /// `N(S)`: points whose singleton is not orthogonal to `s`.
    pub fn near(&self, s: PointSet) -> PointSet {
        PointSet::from_indices((0..self.n()).filter(|&x| !self.orth(PointSet::singleton(x), s)))
    }

    /// Points orthogonal to themselves.
    pub fn self_orthogonal_points(&self) -> PointSet {
        PointSet::from_indices((0..self.n()).filter(|&x| self.point_orth(x, x)))
    }

    /// Small when no nonempty set is self-orthogonal, large when every
    /// singleton is bounded.
    pub fn scale_class(&self) -> ScaleClass {
        let n = self.n();
        let small = match &self.backend {
            FiniteBackend::Pairs(_) => self.self_orthogonal_points().is_empty(),
            FiniteBackend::Table(_) => all_subsets(n).skip(1).all(|a| !self.orth(a, a)),
        };
        if small {
            ScaleClass::Small
        } else if self.bounded_points() == self.full() {
            ScaleClass::Large
        } else {
            ScaleClass::Neither
        }
    }

    /// The pair-generated relation with the same singleton answers.
    pub fn pair_reduction(&self) -> FiniteRelation {
        FiniteRelation::from_pair_fn(self.ground.clone(), self.provenance.clone(), |x, y| {
            self.point_orth(x, y)
        })
    }

    /// Tabulates the relation; needs `n <= 8`.
    pub fn to_table(&self) -> Result<OrthTable> {
        OrthTable::from_fn(self.n(), |a, c| self.orth(a, c))
    }

    /// The same relation on an explicit-table backend.
    pub fn to_explicit(&self) -> Result<FiniteRelation> {
        FiniteRelation::explicit_raw(
            self.ground.clone(),
            self.provenance.clone(),
            self.to_table()?,
        )
    }

    /// First ordered pair of subsets on which the two relations disagree,
    /// scanning masks in increasing order.
    pub fn first_difference(&self, other: &FiniteRelation) -> Result<Option<(PointSet, PointSet)>> {
        if self.n() != other.n() {
            return Err(Error::GroundSizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        if let (FiniteBackend::Pairs(a), FiniteBackend::Pairs(b)) = (&self.backend, &other.backend)
        {
            // pair-generated relations are determined by their matrices
            for x in 0..self.n() {
                let diff = a.rows[x] ^ b.rows[x];
                if let Some(y) = diff.first() {
                    return Ok(Some((PointSet::singleton(x), PointSet::singleton(y))));
                }
            }
            return Ok(None);
        }
        if self.n() > MAX_TABLE_POINTS {
            return Err(Error::budget(
                "table comparison points",
                self.n(),
                MAX_TABLE_POINTS,
            ));
        }
        for a in all_subsets(self.n()) {
            for c in all_subsets(self.n()) {
                if self.orth(a, c) != other.orth(a, c) {
                    return Ok(Some((a, c)));
                }
            }
        }
        Ok(None)
    }

    /// Whether the relations agree on every pair of subsets.
    pub fn same_answers(&self, other: &FiniteRelation) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    /// The relation restricted to the subsets of `within`, re-indexed onto
    /// the points of `within` in increasing order.
    pub fn restrict(&self, within: PointSet) -> Result<FiniteRelation> {
        within.check_within(self.n())?;
        let ground = self.ground.restrict(within);
        let provenance = format!("{} restricted", self.provenance);
        Ok(match &self.backend {
            FiniteBackend::Pairs(m) => {
                let idx: Vec<usize> = within.iter().collect();
                FiniteRelation::from_pair_fn(ground, provenance, |x, y| {
                    m.rows[idx[x]].contains(idx[y])
                })
            }
            FiniteBackend::Table(_) => {
                let table = OrthTable::from_fn(within.len(), |a, c| {
                    self.orth(expand(a, within), expand(c, within))
                })?;
                FiniteRelation::explicit_raw(ground, provenance, table)?
            }
        })
    }

    /// Pointwise conjunction of two relations on the same ground set.
    pub fn intersect(&self, other: &FiniteRelation) -> Result<FiniteRelation> {
        if self.n() != other.n() {
            return Err(Error::GroundSizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let provenance = format!("({}) ∩ ({})", self.provenance, other.provenance);
        Ok(match (&self.backend, &other.backend) {
            (FiniteBackend::Pairs(a), FiniteBackend::Pairs(b)) => FiniteRelation {
                ground: self.ground.clone(),
                backend: FiniteBackend::Pairs(PairMatrix {
                    rows: a.rows.iter().zip(&b.rows).map(|(&x, &y)| x & y).collect(),
                }),
                provenance,
            },
            _ => {
                let table =
                    OrthTable::from_fn(self.n(), |a, c| self.orth(a, c) && other.orth(a, c))?;
                FiniteRelation::explicit_raw(self.ground.clone(), provenance, table)?
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::indexed(n)
    }

    #[test]
    fn pair_rule_matches_definition() {
        let rel = FiniteRelation::disjointness(ground(3));
        assert!(rel.orth(PointSet(0b001), PointSet(0b110)));
        assert!(!rel.orth(PointSet(0b011), PointSet(0b110)));
        assert!(rel.orth(PointSet::EMPTY, rel.full()));
        assert!(rel.orth(rel.full(), PointSet::EMPTY));
    }

    #[test]
    fn explicit_rejects_asymmetric_tables() {
        let table =
            OrthTable::from_fn(2, |a, c| a.is_empty() || c.is_empty() || a.0 < c.0).unwrap();
        assert!(FiniteRelation::explicit(ground(2), "t", table.clone()).is_err());
        assert!(FiniteRelation::explicit_raw(ground(2), "t", table).is_ok());
    }

    #[test]
    fn scale_classes() {
        assert_eq!(
            FiniteRelation::disjointness(ground(3)).scale_class(),
            ScaleClass::Small
        );
        assert_eq!(
            FiniteRelation::total(ground(3)).scale_class(),
            ScaleClass::Large
        );
        // a self-orthogonal, b unbounded
        let rel = FiniteRelation::from_pair_fn(ground(2), "b", |x, y| x != y || x == 0);
        assert_eq!(rel.scale_class(), ScaleClass::Neither);
    }

    #[test]
    fn restriction_reindexes() {
        let rel = FiniteRelation::disjointness(ground(4));
        let sub = rel.restrict(PointSet(0b1010)).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.ground().names(), &["x1".to_string(), "x3".to_string()]);
        assert!(sub.point_orth(0, 1));
        assert!(!sub.point_orth(1, 1));
    }

    #[test]
    fn table_round_trip_preserves_answers() {
        let rel = FiniteRelation::from_pair_fn(ground(4), "r", |x, y| (x + y) % 3 != 0);
        let tab = rel.to_explicit().unwrap();
        assert!(rel.same_answers(&tab).unwrap());
        assert!(tab.same_answers(&rel).unwrap());
    }
}
