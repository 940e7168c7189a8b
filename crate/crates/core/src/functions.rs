//! Chain-valued continuous functions on finite relations.
//!
//! The interval `[0, 1]` is replaced by the chain `{0, 1/m, …, 1}`. On a
//! finite set a function takes finitely many values, any two of which are a
//! positive distance apart, so continuity reduces to the same equalities.

use std::fmt;

use num_rational::Rational64;
use petgraph::unionfind::UnionFind;

use crate::relation::{separation_profile, FiniteBackend, FiniteRelation, SeparationProfile};
use crate::set::{all_subsets, PointSet};
use crate::{Budget, Error, Result};

/// A total function from ground points to `{0, 1/m, …, 1}`, stored as levels
/// `0..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainFunction {
    resolution: u32,
    levels: Vec<u32>,
}

impl fmt::Display for ChainFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl ChainFunction {
    pub fn new(resolution: u32, levels: Vec<u32>) -> Result<ChainFunction> {
        if resolution == 0 {
            return Err(Error::invalid("chain resolution must be at least 1"));
        }
        if let Some(v) = levels.iter().find(|&&v| v > resolution) {
            return Err(Error::invalid(format!(
                "level {v} exceeds resolution {resolution}"
            )));
        }
        Ok(ChainFunction { resolution, levels })
    }

    pub fn constant(n: usize, resolution: u32, level: u32) -> Result<ChainFunction> {
        ChainFunction::new(resolution, vec![level; n])
    }

    /// `0` off `s`, `1` on `s`.
    pub fn indicator(n: usize, s: PointSet) -> ChainFunction {
        let levels = (0..n).map(|x| u32::from(s.contains(x))).collect();
        ChainFunction {
            resolution: 1,
            levels,
        }
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn level(&self, x: usize) -> u32 {
        self.levels[x]
    }

    pub fn value(&self, x: usize) -> Rational64 {
        Rational64::new(i64::from(self.levels[x]), i64::from(self.resolution))
    }

    pub fn values(&self) -> Vec<Rational64> {
        (0..self.len()).map(|x| self.value(x)).collect()
    }

    /// Points with level in `[lo, hi]`.
    pub fn preimage_range(&self, lo: u32, hi: u32) -> PointSet {
        PointSet::from_indices((0..self.len()).filter(|&x| (lo..=hi).contains(&self.levels[x])))
    }

    /// Points whose level lies in `levels` (a mask over `0..=m`).
    pub fn preimage(&self, levels: u64) -> PointSet {
        PointSet::from_indices((0..self.len()).filter(|&x| levels >> self.levels[x] & 1 == 1))
    }

    pub fn zero_set(&self) -> PointSet {
        self.preimage_range(0, 0)
    }

    fn used_levels(&self) -> u64 {
        self.levels.iter().fold(0, |acc, &v| acc | 1 << v)
    }
}

/// A function defined on part of the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialChainFunction {
    resolution: u32,
    levels: Vec<Option<u32>>,
}

impl PartialChainFunction {
    pub fn new(resolution: u32, levels: Vec<Option<u32>>) -> Result<PartialChainFunction> {
        ChainFunction::new(resolution, levels.iter().flatten().copied().collect())?;
        Ok(PartialChainFunction { resolution, levels })
    }

    pub fn domain(&self) -> PointSet {
        PointSet::from_indices((0..self.levels.len()).filter(|&x| self.levels[x].is_some()))
    }

    pub fn level(&self, x: usize) -> Option<u32> {
        self.levels[x]
    }

    /// The function on its domain, re-indexed onto the domain's points.
    fn compressed(&self) -> ChainFunction {
        ChainFunction {
            resolution: self.resolution,
            levels: self.levels.iter().flatten().copied().collect(),
        }
    }
}

impl From<&ChainFunction> for PartialChainFunction {
    fn from(f: &ChainFunction) -> PartialChainFunction {
        PartialChainFunction {
            resolution: f.resolution,
            levels: f.levels.iter().map(|&v| Some(v)).collect(),
        }
    }
}

/// Connected components of the graph joining `x` and `y` when
/// `{x}` and `{y}` are not orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    parts: Vec<PointSet>,
    of: Vec<usize>,
}

impl Components {
    pub fn of(rel: &FiniteRelation) -> Components {
        let n = rel.n();
        let mut uf = UnionFind::<usize>::new(n);
        for x in 0..n {
            for y in x + 1..n {
                if !rel.point_orth(x, y) {
                    uf.union(x, y);
                }
            }
        }
        let labels = uf.into_labeling();
        let mut roots: Vec<usize> = labels.clone();
        roots.sort_unstable();
        roots.dedup();
        let of: Vec<usize> = labels
            .iter()
            .map(|l| roots.binary_search(l).expect("root"))
            .collect();
        let mut parts = vec![PointSet::EMPTY; roots.len()];
        for (x, &k) in of.iter().enumerate() {
            parts[k] = parts[k].with(x);
        }
        Components { parts, of }
    }

    pub fn parts(&self) -> &[PointSet] {
        &self.parts
    }

    pub fn component_of(&self, x: usize) -> PointSet {
        self.parts[self.of[x]]
    }

    /// Union of the components meeting `s`.
    pub fn saturate(&self, s: PointSet) -> PointSet {
        s.iter()
            .fold(PointSet::EMPTY, |acc, x| acc | self.component_of(x))
    }
}

fn require_len(rel: &FiniteRelation, f: &ChainFunction) -> Result<()> {
    if rel.n() != f.len() {
        return Err(Error::GroundSizeMismatch {
            left: rel.n(),
            right: f.len(),
        });
    }
    Ok(())
}

/// Two sets of points with disjoint value sets whose preimages are not
/// orthogonal. Pair-generated relations are decided on point pairs; other
/// relations on every pair of disjoint value sets.
pub fn chain_continuity_witness(
    rel: &FiniteRelation,
    f: &ChainFunction,
) -> Result<Option<(PointSet, PointSet)>> {
    require_len(rel, f)?;
    let n = rel.n();
    if let FiniteBackend::Pairs(_) = rel.backend() {
        let hit = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| f.levels[x] != f.levels[y] && !rel.point_orth(x, y));
        return Ok(hit.map(|(x, y)| (PointSet::singleton(x), PointSet::singleton(y))));
    }
    let used = PointSet(f.used_levels());
    for a in used.subsets() {
        for c in (used - a).subsets() {
            let (pa, pc) = (f.preimage(a.bits()), f.preimage(c.bits()));
            if !rel.orth(pa, pc) {
                return Ok(Some((pa, pc)));
            }
        }
    }
    Ok(None)
}

/// Continuity into the chain with its metric relation.
pub fn is_chain_continuous(rel: &FiniteRelation, f: &ChainFunction) -> Result<bool> {
    Ok(chain_continuity_witness(rel, f)?.is_none())
}

/// Continuity of `x ↦ (f(x), g(x))` into the product of chains with its
/// metric relation: disjoint sets of value pairs must pull back to
/// orthogonal sets.
pub fn jointly_continuous(
    rel: &FiniteRelation,
    f: &ChainFunction,
    g: &ChainFunction,
) -> Result<bool> {
    require_len(rel, f)?;
    require_len(rel, g)?;
    let mut pairs: Vec<(u32, u32)> = (0..f.len()).map(|x| (f.levels[x], g.levels[x])).collect();
    pairs.sort_unstable();
    pairs.dedup();
    let fiber = |mask: PointSet| {
        PointSet::from_indices((0..f.len()).filter(|&x| {
            let v = (f.levels[x], g.levels[x]);
            mask.iter().any(|k| pairs[k] == v)
        }))
    };
    let used = PointSet::full(pairs.len());
    for a in used.subsets() {
        for c in (used - a).subsets() {
            if !rel.orth(fiber(a), fiber(c)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A continuous `f` with `f(C) = {0}` and `f(D) = {1}`: `1` on the
/// components meeting `D`, `0` elsewhere. Absent when some component meets
/// both sets or the result fails the continuity check.
pub fn separating_function(
    rel: &FiniteRelation,
    c: PointSet,
    d: PointSet,
    resolution: u32,
) -> Result<Option<ChainFunction>> {
    c.check_within(rel.n())?;
    d.check_within(rel.n())?;
    let comps = Components::of(rel);
    let (sc, sd) = (comps.saturate(c), comps.saturate(d));
    if sc.intersects(sd) {
        return Ok(None);
    }
    let levels = (0..rel.n())
        .map(|x| if sd.contains(x) { resolution } else { 0 })
        .collect();
    let f = ChainFunction::new(resolution, levels)?;
    Ok(is_chain_continuous(rel, &f)?.then_some(f))
}

/// `C ⊥ D` iff some continuous function is `0` on `C` and `1` on `D`.
pub fn functional_relation(rel: &FiniteRelation) -> Result<FiniteRelation> {
    let comps = Components::of(rel);
    if rel.is_pair_generated() {
        return Ok(FiniteRelation::from_pair_fn(
            rel.ground().clone(),
            format!("functional {}", rel.provenance()),
            |x, y| !comps.component_of(x).contains(y),
        ));
    }
    let table = crate::relation::OrthTable::from_fn(rel.n(), |c, d| {
        separating_function(rel, c, d, 1).ok().flatten().is_some()
    })?;
    FiniteRelation::explicit_raw(
        rel.ground().clone(),
        format!("functional {}", rel.provenance()),
        table,
    )
}

/// Every two distinct points are separated by a continuous function.
pub fn is_functionally_hausdorff(rel: &FiniteRelation) -> Result<bool> {
    let n = rel.n();
    for x in 0..n {
        for y in 0..n {
            if x != y
                && separating_function(rel, PointSet::singleton(x), PointSet::singleton(y), 1)?
                    .is_none()
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of pasting partial functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pasting {
    /// The assembled function and whether the continuity check confirmed it.
    Pasted {
        function: ChainFunction,
        certified: bool,
    },
    /// `f⁻¹[0, c]` and `f⁻¹[d, m]` are not orthogonal.
    HypothesisFails { lower: PointSet, upper: PointSet },
}

/// Assembles `parts` into one function and applies the pasting criterion
/// with cuts `0 < c < d < m`: parts continuous on their domains and
/// `f⁻¹[0, c] ⊥ f⁻¹[d, m]` give a continuous function.
pub fn paste(
    rel: &FiniteRelation,
    parts: &[PartialChainFunction],
    c: u32,
    d: u32,
) -> Result<Pasting> {
    let n = rel.n();
    let resolution = parts
        .first()
        .map(|p| p.resolution)
        .ok_or_else(|| Error::pre("nothing to paste"))?;
    if parts
        .iter()
        .any(|p| p.resolution != resolution || p.levels.len() != n)
    {
        return Err(Error::pre("parts must share the ground set and resolution"));
    }
    let mut levels = vec![None; n];
    for p in parts {
        for x in p.domain().iter() {
            match (levels[x], p.levels[x]) {
                (Some(a), Some(b)) if a != b => {
                    return Err(Error::pre(format!(
                        "parts disagree at {}: {a} vs {b}",
                        rel.ground().name(x)
                    )))
                }
                (_, v) => levels[x] = v,
            }
        }
    }
    let levels: Vec<u32> = match levels.iter().copied().collect::<Option<Vec<u32>>>() {
        Some(v) => v,
        None => return Err(Error::pre("parts do not cover the ground set")),
    };
    let f = ChainFunction::new(resolution, levels)?;
    if let [only] = parts {
        let certified = is_chain_continuous(rel, &f)?;
        debug_assert_eq!(only.domain(), rel.full());
        return Ok(Pasting::Pasted {
            function: f,
            certified,
        });
    }
    if !(0 < c && c < d && d < resolution) {
        return Err(Error::pre(format!(
            "cuts must satisfy 0 < {c} < {d} < {resolution}"
        )));
    }
    for p in parts {
        let dom = p.domain();
        let sub = rel.restrict(dom)?;
        if !is_chain_continuous(&sub, &p.compressed())? {
            return Err(Error::pre(format!(
                "part on {} is not continuous",
                rel.ground().format(dom)
            )));
        }
    }
    let (lower, upper) = (f.preimage_range(0, c), f.preimage_range(d, resolution));
    if !rel.orth(lower, upper) {
        return Ok(Pasting::HypothesisFails { lower, upper });
    }
    let certified = is_chain_continuous(rel, &f)?;
    Ok(Pasting::Pasted {
        function: f,
        certified,
    })
}

/// Result of extending a partial function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    Extended(ChainFunction),
    /// A component on which the partial function takes two values.
    Conflict {
        component: PointSet,
        levels: (u32, u32),
    },
}

/// Extends by propagating the value along each component that meets the
/// domain; components missing the domain get `default`.
pub fn extend_function(
    rel: &FiniteRelation,
    f: &PartialChainFunction,
    default: u32,
) -> Result<Extension> {
    if f.levels.len() != rel.n() {
        return Err(Error::GroundSizeMismatch {
            left: rel.n(),
            right: f.levels.len(),
        });
    }
    if default > f.resolution {
        return Err(Error::invalid(format!(
            "default level {default} exceeds resolution {}",
            f.resolution
        )));
    }
    let comps = Components::of(rel);
    let mut levels = vec![default; rel.n()];
    for &part in comps.parts() {
        let mut seen: Option<u32> = None;
        for x in (part & f.domain()).iter() {
            let v = f.levels[x].expect("in domain");
            match seen {
                Some(w) if w != v => {
                    return Ok(Extension::Conflict {
                        component: part,
                        levels: (w, v),
                    })
                }
                _ => seen = Some(v),
            }
        }
        for x in part.iter() {
            levels[x] = seen.unwrap_or(default);
        }
    }
    let g = ChainFunction::new(f.resolution, levels)?;
    if !is_chain_continuous(rel, &g)? {
        return Err(Error::pre(
            "relation is not determined by point pairs; propagation is not continuous",
        ));
    }
    Ok(Extension::Extended(g))
}

/// Whether the partial function is continuous on its domain for the
/// restricted relation.
pub fn partial_is_continuous(rel: &FiniteRelation, f: &PartialChainFunction) -> Result<bool> {
    let dom = f.domain();
    is_chain_continuous(&rel.restrict(dom)?, &f.compressed())
}

/// `A (⊥₁ ∩ ⊥₂) C` iff `A ⊥₁ C` and `A ⊥₂ C`.
pub fn intersect_relations(a: &FiniteRelation, b: &FiniteRelation) -> Result<FiniteRelation> {
    a.intersect(b)
}

/// Zero sets of continuous functions, with the lattice closure checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroLattice {
    pub members: Vec<PointSet>,
    pub closed_under_union: bool,
    pub closed_under_intersection: bool,
}

impl ZeroLattice {
    pub fn contains(&self, s: PointSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn cozero_sets(&self, n: usize) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = self.members.iter().map(|z| z.complement(n)).collect();
        out.sort();
        out
    }
}

/// `Z` is a zero set iff the two-valued function `0` on `Z`, `1` off it is
/// continuous: any continuous function with zero set `Z` pulls the disjoint
/// sets `{0}` and `(0, 1]` back to `Z` and its complement.
pub fn zero_lattice(rel: &FiniteRelation, budget: &Budget) -> Result<ZeroLattice> {
    let n = rel.n();
    budget.require("zero set points", n, budget.pair_search_n)?;
    let mut members = Vec::new();
    for z in all_subsets(n) {
        let f = ChainFunction::indicator(n, z.complement(n));
        if is_chain_continuous(rel, &f)? {
            members.push(z);
        }
    }
    members.sort();
    let has = |s: PointSet| members.binary_search(&s).is_ok();
    let closed_under_union = members.iter().all(|&a| members.iter().all(|&b| has(a | b)));
    let closed_under_intersection = members.iter().all(|&a| members.iter().all(|&b| has(a & b)));
    Ok(ZeroLattice {
        members,
        closed_under_union,
        closed_under_intersection,
    })
}

/// One compatibility condition with an optional counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub holds: bool,
    pub witness: Option<(PointSet, PointSet)>,
}

impl Condition {
    fn of(witness: Option<(PointSet, PointSet)>) -> Condition {
        Condition {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Conditions relating a large scale relation and a small scale one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityReport {
    /// Disjoint `A ⊥ C` become small-scale orthogonal after removing some
    /// bounded `B`; the witness is an `(A, C)` for which no `B` works.
    pub trimming: Condition,
    /// The intersection relation is normal.
    pub intersection_normal: Condition,
    /// Every bounded `B` lies in a bounded `U` with `(X ∖ U) ⊥_ss B`; the
    /// witness is `(B, B)`.
    pub bounded_neighborhoods: Condition,
    /// For a topological small-scale relation: `A ⊥ C ⟹ cl(A) ⊥ cl(C)`.
    pub closures_orthogonal: Option<Condition>,
    /// For a topological small-scale relation: every bounded set lies in a
    /// bounded open set; witness `(B, B)`.
    pub open_bounded_neighborhoods: Option<Condition>,
    pub intersection: FiniteRelation,
    pub intersection_profile: SeparationProfile,
}

impl CompatibilityReport {
    /// Both conditions of the compatibility criterion.
    pub fn passes(&self) -> bool {
        self.trimming.holds && self.intersection_normal.holds
    }
}

pub fn compatibility_conditions(
    ls: &FiniteRelation,
    ss: &FiniteRelation,
    topology: Option<&crate::models::FiniteTopology>,
    budget: &Budget,
) -> Result<CompatibilityReport> {
    let n = ls.n();
    budget.require("compatibility points", n, budget.exhaustive_n)?;
    if ss.n() != n {
        return Err(Error::GroundSizeMismatch {
            left: n,
            right: ss.n(),
        });
    }
    if ss.scale_class() != crate::relation::ScaleClass::Small {
        return Err(Error::pre("the second relation must be small scale"));
    }
    let full = ls.full();
    let bounded: Vec<PointSet> = all_subsets(n).filter(|&b| ls.orth(b, full)).collect();

    let mut trimming = None;
    'outer: for a in all_subsets(n) {
        for c in (full - a).subsets() {
            if ls.orth(a, c) && !bounded.iter().any(|&b| ss.orth(a - b, c - b)) {
                trimming = Some((a, c));
                break 'outer;
            }
        }
    }

    let intersection = intersect_relations(ls, ss)?;
    let intersection_profile = separation_profile(&intersection, budget)?;
    let intersection_normal = Condition::of(match intersection_profile.normal.counterexample {
        Some(crate::relation::SeparationFailure::NoSpan { c, d }) => Some((c, d)),
        Some(crate::relation::SeparationFailure::PointsNotOrthogonal { x, y }) => {
            Some((PointSet::singleton(x), PointSet::singleton(y)))
        }
        Some(crate::relation::SeparationFailure::UnboundedSelfOrthogonal { b }) => Some((b, b)),
        None => None,
    });

    let bounded_neighborhoods = bounded
        .iter()
        .find(|&&b| {
            !bounded
                .iter()
                .any(|&u| b.is_subset(u) && ss.orth(full - u, b))
        })
        .map(|&b| (b, b));

    let (closures_orthogonal, open_bounded_neighborhoods) = match topology {
        None => (None, None),
        Some(top) => {
            if top.n() != n {
                return Err(Error::GroundSizeMismatch {
                    left: n,
                    right: top.n(),
                });
            }
            let mut closures = None;
            'cl: for a in all_subsets(n) {
                for c in all_subsets(n) {
                    if ls.orth(a, c) && !ls.orth(top.closure(a), top.closure(c)) {
                        closures = Some((a, c));
                        break 'cl;
                    }
                }
            }
            let opens = bounded
                .iter()
                .find(|&&b| !bounded.iter().any(|&u| b.is_subset(u) && top.is_open(u)))
                .map(|&b| (b, b));
            (Some(Condition::of(closures)), Some(Condition::of(opens)))
        }
    };

    Ok(CompatibilityReport {
        trimming: Condition::of(trimming),
        intersection_normal,
        bounded_neighborhoods: Condition::of(bounded_neighborhoods),
        closures_orthogonal,
        open_bounded_neighborhoods,
        intersection,
        intersection_profile,
    })
}

/// A function continuous for the intersection relation that agrees with `f`
/// outside the bounded set `bounded`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub function: ChainFunction,
    pub bounded: PointSet,
}

/// Searches the bounded sets `B` of `ls` for one outside of which `f` is
/// constant on every non-orthogonality component of `ls ∩ ss`, and returns
/// the function taking that constant on each component.
pub fn approximate(
    ls: &FiniteRelation,
    ss: &FiniteRelation,
    f: &ChainFunction,
    budget: &Budget,
) -> Result<Option<Approximation>> {
    let n = ls.n();
    budget.require("approximation points", n, budget.pair_search_n)?;
    require_len(ls, f)?;
    let meet = intersect_relations(ls, ss)?;
    let comps = Components::of(&meet);
    let full = ls.full();
    let mut bounded: Vec<PointSet> = all_subsets(n).filter(|&b| ls.orth(b, full)).collect();
    bounded.sort_by_key(|b| b.len());
    for b in bounded {
        let mut levels = f.levels.clone();
        let fits = comps.parts().iter().all(|&part| {
            let outside = part - b;
            let mut vals = outside.iter().map(|x| f.levels[x]);
            let first = vals.next();
            if vals.any(|v| Some(v) != first) {
                return false;
            }
            let v = first.unwrap_or(0);
            for x in part.iter() {
                levels[x] = v;
            }
            true
        });
        if fits {
            let g = ChainFunction::new(f.resolution, levels)?;
            if is_chain_continuous(&meet, &g)? {
                return Ok(Some(Approximation {
                    function: g,
                    bounded: b,
                }));
            }
        }
    }
    Ok(None)
}

/// Re-indexes a function on the points of `within`.
pub fn restrict_function(f: &ChainFunction, within: PointSet) -> ChainFunction {
    ChainFunction {
        resolution: f.resolution,
        levels: within.iter().map(|x| f.levels[x]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::FiniteTopology;
    use crate::set::GroundSet;

    fn sierpinski() -> FiniteRelation {
        FiniteTopology::sierpinski().relation()
    }

    #[test]
    fn continuity_examples() {
        let s = sierpinski();
        assert!(is_chain_continuous(&s, &ChainFunction::constant(2, 4, 3).unwrap()).unwrap());
        let f = ChainFunction::new(1, vec![0, 1]).unwrap();
        assert_eq!(
            chain_continuity_witness(&s, &f).unwrap(),
            Some((PointSet::singleton(0), PointSet::singleton(1)))
        );
        let disj = FiniteRelation::disjointness(GroundSet::indexed(3));
        assert!(
            is_chain_continuous(&disj, &ChainFunction::new(2, vec![0, 2, 1]).unwrap()).unwrap()
        );
    }

    #[test]
    fn separating_functions() {
        let disj = FiniteRelation::disjointness(GroundSet::indexed(3));
        let f = separating_function(&disj, PointSet(0b001), PointSet(0b110), 1)
            .unwrap()
            .unwrap();
        assert_eq!(f, ChainFunction::indicator(3, PointSet(0b110)));
        assert_eq!(
            separating_function(&sierpinski(), PointSet(0b01), PointSet(0b10), 1).unwrap(),
            None
        );
    }

    #[test]
    fn pasting_two_constant_parts() {
        let rel = FiniteRelation::from_pair_fn(GroundSet::indexed(4), "halves", |x, y| {
            (x < 2) != (y < 2)
        });
        let low = PartialChainFunction::new(4, vec![Some(0), Some(0), None, None]).unwrap();
        let high = PartialChainFunction::new(4, vec![None, None, Some(4), Some(4)]).unwrap();
        match paste(&rel, &[low, high], 1, 3).unwrap() {
            Pasting::Pasted {
                function,
                certified,
            } => {
                assert!(certified);
                assert_eq!(function.levels(), &[0, 0, 4, 4]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pasting_hypothesis_failure() {
        // x1 and x2 are not orthogonal but land on opposite sides of the cuts
        let rel =
            FiniteRelation::from_pair_fn(GroundSet::indexed(4), "path", |x, y| x.abs_diff(y) != 1);
        let low = PartialChainFunction::new(4, vec![Some(0), Some(0), None, None]).unwrap();
        let high = PartialChainFunction::new(4, vec![None, None, Some(4), Some(4)]).unwrap();
        assert_eq!(
            paste(&rel, &[low, high], 1, 3).unwrap(),
            Pasting::HypothesisFails {
                lower: PointSet(0b0011),
                upper: PointSet(0b1100)
            }
        );
    }

    #[test]
    fn pasting_a_single_part_returns_it() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(2));
        let f = ChainFunction::new(2, vec![1, 2]).unwrap();
        let out = paste(&rel, &[PartialChainFunction::from(&f)], 1, 1).unwrap();
        assert_eq!(
            out,
            Pasting::Pasted {
                function: f,
                certified: true
            }
        );
    }

    #[test]
    fn pasting_rejects_disagreeing_overlap() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(2));
        let a = PartialChainFunction::new(2, vec![Some(0), Some(1)]).unwrap();
        let b = PartialChainFunction::new(2, vec![None, Some(2)]).unwrap();
        assert!(paste(&rel, &[a, b], 1, 1).is_err());
    }

    #[test]
    fn extension_examples() {
        let disj = FiniteRelation::disjointness(GroundSet::indexed(3));
        let partial = PartialChainFunction::new(2, vec![Some(2), None, None]).unwrap();
        assert_eq!(
            extend_function(&disj, &partial, 0).unwrap(),
            Extension::Extended(ChainFunction::new(2, vec![2, 0, 0]).unwrap())
        );
        let rel =
            FiniteRelation::from_pair_fn(GroundSet::indexed(3), "ab", |x, y| x != y && x + y != 1);
        let clash = PartialChainFunction::new(1, vec![Some(0), Some(1), None]).unwrap();
        assert_eq!(
            extend_function(&rel, &clash, 0).unwrap(),
            Extension::Conflict {
                component: PointSet(0b011),
                levels: (0, 1)
            }
        );
        let f = ChainFunction::new(1, vec![1, 1, 0]).unwrap();
        assert_eq!(
            extend_function(&rel, &PartialChainFunction::from(&f), 0).unwrap(),
            Extension::Extended(f)
        );
    }

    #[test]
    fn intersection_examples() {
        let s = sierpinski();
        let disj = FiniteRelation::disjointness(GroundSet::indexed(2));
        assert!(intersect_relations(&disj, &s)
            .unwrap()
            .same_answers(&s)
            .unwrap());
        assert!(intersect_relations(&s, &s)
            .unwrap()
            .same_answers(&s)
            .unwrap());
        let total = FiniteRelation::total(GroundSet::indexed(2));
        assert!(intersect_relations(&total, &s)
            .unwrap()
            .same_answers(&s)
            .unwrap());
    }

    #[test]
    fn total_with_disjointness_is_compatible() {
        let g = GroundSet::indexed(3);
        let b = Budget::default();
        let top = FiniteTopology::discrete(g.clone());
        let report = compatibility_conditions(
            &FiniteRelation::total(g.clone()),
            &FiniteRelation::disjointness(g.clone()),
            Some(&top),
            &b,
        )
        .unwrap();
        assert!(report.passes());
        assert!(report.bounded_neighborhoods.holds);
        assert_eq!(
            report.closures_orthogonal.as_ref().map(|c| c.holds),
            Some(true)
        );
        assert!(report
            .intersection
            .same_answers(&FiniteRelation::disjointness(g))
            .unwrap());
    }

    #[test]
    fn trimming_failure_is_reported() {
        // ls: x0 ⊥ x1 with nothing bounded; ss: x0 and x1 not orthogonal
        let g = GroundSet::indexed(2);
        let ls = FiniteRelation::disjointness(g.clone());
        let ss = FiniteRelation::from_pair_fn(g, "glued", |_, _| false);
        let report = compatibility_conditions(&ls, &ss, None, &Budget::default()).unwrap();
        assert_eq!(
            report.trimming.witness,
            Some((PointSet(0b01), PointSet(0b10)))
        );
        assert!(!report.passes());
    }

    #[test]
    fn zero_sets_of_components() {
        let rel =
            FiniteRelation::from_pair_fn(GroundSet::indexed(3), "ab", |x, y| x != y && x + y != 1);
        let lat = zero_lattice(&rel, &Budget::default()).unwrap();
        assert_eq!(
            lat.members,
            vec![
                PointSet(0),
                PointSet(0b011),
                PointSet(0b100),
                PointSet(0b111)
            ]
        );
        assert!(lat.closed_under_union && lat.closed_under_intersection);
    }

    #[test]
    fn joint_continuity_of_pairs() {
        let rel =
            FiniteRelation::from_pair_fn(GroundSet::indexed(3), "ab", |x, y| x != y && x + y != 1);
        let good = ChainFunction::new(1, vec![1, 1, 0]).unwrap();
        let bad = ChainFunction::new(1, vec![0, 1, 0]).unwrap();
        assert!(jointly_continuous(&rel, &good, &good).unwrap());
        assert!(!jointly_continuous(&rel, &good, &bad).unwrap());
    }
}
