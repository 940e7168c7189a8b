//! Checking the orthogonality axioms.
//!
//! The exhaustive finite check works row by row: for a fixed `A` the family
//! `{C : A ⊥ C}` satisfies the union axiom for all `C, C'` exactly when it is
//! empty or equals the power set of its union. Only rows that fail this test
//! are scanned pair by pair to extract the smallest witness.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FiniteRelation, OrthRelation, Subset};
use crate::set::{all_subsets, PointSet};
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `A ⊥ C ⟺ C ⊥ A`.
    Symmetry,
    /// `∅ ⊥ X`.
    EmptyOrthogonal,
    /// `A ⊥ (C ∪ C') ⟺ A ⊥ C and A ⊥ C'`.
    UnionSplit,
    /// `A ⊥ (C ∪ C') ⟺ C ⊥ A and C' ⊥ A` (replaces symmetry and the union
    /// axiom in the reduced system).
    ReducedUnionSplit,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::Symmetry => "symmetry",
            Axiom::EmptyOrthogonal => "empty-orthogonal",
            Axiom::UnionSplit => "union-split",
            Axiom::ReducedUnionSplit => "reduced-union-split",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A failed axiom instance. Witness layout: `[A, C]` for symmetry,
/// `[∅, X]` for the empty-set axiom, `[A, C, C']` for the union axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Subset>,
}

impl Violation {
    /// Re-evaluates the witness and reports whether the failure reproduces.
    pub fn reproduces(&self, rel: &OrthRelation) -> Result<bool> {
        let w = &self.witness;
        let need = |k: usize| {
            if w.len() == k {
                Ok(())
            } else {
                Err(Error::invalid(format!(
                    "{} witness needs {k} subsets, got {}",
                    self.axiom,
                    w.len()
                )))
            }
        };
        match self.axiom {
            Axiom::Symmetry => {
                need(2)?;
                Ok(rel.orth(&w[0], &w[1])? != rel.orth(&w[1], &w[0])?)
            }
            Axiom::EmptyOrthogonal => {
                need(2)?;
                Ok(w[0].is_empty() && !rel.orth(&w[0], &w[1])?)
            }
            Axiom::UnionSplit => {
                need(3)?;
                let joint = rel.orth(&w[0], &w[1].union(&w[2])?)?;
                Ok(joint != (rel.orth(&w[0], &w[1])? && rel.orth(&w[0], &w[2])?))
            }
            Axiom::ReducedUnionSplit => {
                need(3)?;
                let joint = rel.orth(&w[0], &w[1].union(&w[2])?)?;
                Ok(joint != (rel.orth(&w[1], &w[0])? && rel.orth(&w[2], &w[0])?))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Every subset (pair, triple) of the ground set.
    Exhaustive,
    /// Random instances drawn from a seeded pool.
    Sampled,
    /// Exhaustive when the ground set fits the budget, sampled otherwise.
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    /// At most one violation per axiom: the first one found in scan order.
    pub violations: Vec<Violation>,
    /// Number of relation evaluations performed.
    pub evaluations: u64,
    /// Whether every instance was covered.
    pub exhaustive: bool,
}

impl AxiomReport {
    fn new(violations: Vec<Violation>, evaluations: u64, exhaustive: bool) -> AxiomReport {
        AxiomReport {
            passed: violations.is_empty(),
            violations,
            evaluations,
            exhaustive,
        }
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// Row `{C : A ⊥ C}` as a bitset over all `2^n` masks.
fn row_bits(rel: &FiniteRelation, a: PointSet, words: usize) -> Vec<u64> {
    let mut bits = vec![0u64; words];
    for c in all_subsets(rel.n()) {
        if rel.orth(a, c) {
            bits[c.0 as usize / 64] |= 1 << (c.0 % 64);
        }
    }
    bits
}

fn bit(bits: &[u64], c: PointSet) -> bool {
    bits[c.0 as usize / 64] >> (c.0 % 64) & 1 == 1
}

/// Whether a row is empty or a full power set.
fn is_principal(bits: &[u64]) -> bool {
    let count: u32 = bits.iter().map(|w| w.count_ones()).sum();
    if count == 0 {
        return true;
    }
    let mut union = 0u64;
    for (w, word) in bits.iter().enumerate() {
        let mut rest = *word;
        while rest != 0 {
            let i = rest.trailing_zeros() as u64;
            union |= w as u64 * 64 + i;
            rest &= rest - 1;
        }
    }
    // every member is a subset of `union`, so equality is a size comparison
    count == 1u32 << union.count_ones()
}

/// Exhaustive check of symmetry, `∅ ⊥ X` and the union axiom.
pub fn verify_finite_axioms(rel: &FiniteRelation, budget: &Budget) -> Result<AxiomReport> {
    let n = rel.n();
    budget.require("axiom scan points", n, budget.exhaustive_n)?;
    let full = rel.full();
    let words = (1usize << n).div_ceil(64);
    let mut violations = Vec::new();
    let mut evaluations = 0u64;

    let rows: Vec<Vec<u64>> = all_subsets(n).map(|a| row_bits(rel, a, words)).collect();
    evaluations += 1u64 << (2 * n);

    'sym: for a in all_subsets(n) {
        for c in all_subsets(n) {
            if bit(&rows[a.0 as usize], c) != bit(&rows[c.0 as usize], a) {
                violations.push(Violation {
                    axiom: Axiom::Symmetry,
                    witness: vec![a.into(), c.into()],
                });
                break 'sym;
            }
        }
    }

    evaluations += 1;
    if !rel.orth(PointSet::EMPTY, full) {
        violations.push(Violation {
            axiom: Axiom::EmptyOrthogonal,
            witness: vec![PointSet::EMPTY.into(), full.into()],
        });
    }

    for a in all_subsets(n) {
        let row = &rows[a.0 as usize];
        if is_principal(row) {
            continue;
        }
        let witness = all_subsets(n).find_map(|c| {
            all_subsets(n).find_map(|c2| {
                evaluations += 1;
                let joint = bit(row, c | c2);
                (joint != (bit(row, c) && bit(row, c2))).then_some((c, c2))
            })
        });
        let (c, c2) = witness.expect("a non-principal row has a failing pair");
        violations.push(Violation {
            axiom: Axiom::UnionSplit,
            witness: vec![a.into(), c.into(), c2.into()],
        });
        break;
    }
    Ok(AxiomReport::new(violations, evaluations, true))
}

/// Exhaustive check of the reduced system: `∅ ⊥ X` and
/// `A ⊥ (C ∪ C') ⟺ C ⊥ A and C' ⊥ A`, without assuming symmetry.
pub fn verify_reduced_axioms(rel: &FiniteRelation, budget: &Budget) -> Result<AxiomReport> {
    let n = rel.n();
    budget.require("axiom scan points", n, budget.exhaustive_n)?;
    let full = rel.full();
    let words = (1usize << n).div_ceil(64);
    let rows: Vec<Vec<u64>> = all_subsets(n).map(|a| row_bits(rel, a, words)).collect();
    let mut evaluations = 1u64 << (2 * n);
    let mut violations = Vec::new();
    if !rel.orth(PointSet::EMPTY, full) {
        violations.push(Violation {
            axiom: Axiom::EmptyOrthogonal,
            witness: vec![PointSet::EMPTY.into(), full.into()],
        });
    }
    'outer: for a in all_subsets(n) {
        let row = &rows[a.0 as usize];
        let col = |c: PointSet| bit(&rows[c.0 as usize], a);
        // with C = C' the axiom forces row = column, after which it is the
        // usual union axiom on the row
        let row_is_column = all_subsets(n).all(|c| bit(row, c) == col(c));
        if row_is_column && is_principal(row) {
            continue;
        }
        for c in all_subsets(n) {
            for c2 in all_subsets(n) {
                evaluations += 1;
                if bit(row, c | c2) != (col(c) && col(c2)) {
                    violations.push(Violation {
                        axiom: Axiom::ReducedUnionSplit,
                        witness: vec![a.into(), c.into(), c2.into()],
                    });
                    break 'outer;
                }
            }
        }
        unreachable!("a failing row always has a failing pair");
    }
    Ok(AxiomReport::new(violations, evaluations, true))
}

/// Checks the axioms on any backend. Finite relations within the budget are
/// scanned exhaustively (or fail with `BudgetExceeded` when `Exhaustive` is
/// demanded beyond it); everything else draws `budget.samples` random triples
/// from `pool`.
pub fn verify_axioms(
    rel: &OrthRelation,
    pool: &[Subset],
    mode: CheckMode,
    budget: &Budget,
) -> Result<AxiomReport> {
    if let OrthRelation::Finite(r) = rel {
        let fits = r.n() <= budget.exhaustive_n;
        match mode {
            CheckMode::Exhaustive => return verify_finite_axioms(r, budget),
            CheckMode::Auto if fits => return verify_finite_axioms(r, budget),
            _ => {}
        }
    } else if mode == CheckMode::Exhaustive {
        return Err(Error::pre("exhaustive axiom checks need a finite backend"));
    }
    verify_sampled(rel, pool, budget)
}

fn verify_sampled(rel: &OrthRelation, pool: &[Subset], budget: &Budget) -> Result<AxiomReport> {
    let mut violations = Vec::new();
    let mut evaluations = 1u64;
    let empty = rel.empty();
    let full = rel.full();
    if !rel.orth(&empty, &full)? {
        violations.push(Violation {
            axiom: Axiom::EmptyOrthogonal,
            witness: vec![empty, full],
        });
    }
    if pool.is_empty() || budget.samples == 0 {
        return Ok(AxiomReport::new(violations, evaluations, false));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut symmetric_ok = true;
    let mut union_ok = true;
    for _ in 0..budget.samples {
        let a = pool.choose(&mut rng).expect("nonempty pool");
        let c = pool.choose(&mut rng).expect("nonempty pool");
        let c2 = pool.choose(&mut rng).expect("nonempty pool");
        let ac = rel.orth(a, c)?;
        evaluations += 1;
        if symmetric_ok {
            evaluations += 1;
            if rel.orth(c, a)? != ac {
                symmetric_ok = false;
                violations.push(Violation {
                    axiom: Axiom::Symmetry,
                    witness: vec![a.clone(), c.clone()],
                });
            }
        }
        if union_ok {
            let joint = rel.orth(a, &c.union(c2)?)?;
            let split = ac && rel.orth(a, c2)?;
            evaluations += 2;
            if joint != split {
                union_ok = false;
                violations.push(Violation {
                    axiom: Axiom::UnionSplit,
                    witness: vec![a.clone(), c.clone(), c2.clone()],
                });
            }
        }
        if !symmetric_ok && !union_ok {
            break;
        }
    }
    violations.sort_by_key(|v| v.axiom);
    Ok(AxiomReport::new(violations, evaluations, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::OrthTable;
    use crate::set::GroundSet;

    /// Literal triple scan used as the reference.
    fn triple_scan(rel: &FiniteRelation) -> Option<(PointSet, PointSet, PointSet)> {
        let n = rel.n();
        for a in all_subsets(n) {
            for c in all_subsets(n) {
                for c2 in all_subsets(n) {
                    if rel.orth(a, c | c2) != (rel.orth(a, c) && rel.orth(a, c2)) {
                        return Some((a, c, c2));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn metric_like_relation_passes() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(4));
        let report = verify_finite_axioms(&rel, &Budget::default()).unwrap();
        assert!(report.passed, "{report:?}");
        assert!(report.exhaustive);
    }

    #[test]
    fn union_violation_has_smallest_witness() {
        let n = 3;
        let base = FiniteRelation::disjointness(GroundSet::indexed(n));
        let mut table = base.to_table().unwrap();
        // A ⊥ (C ∪ C') stays true but A ⊥ C becomes false
        table.flip_symmetric(PointSet(0b001), PointSet(0b010));
        let rel = FiniteRelation::explicit(GroundSet::indexed(n), "mutated", table).unwrap();
        let report = verify_finite_axioms(&rel, &Budget::default()).unwrap();
        assert!(!report.passed);
        let v = report.violation(Axiom::UnionSplit).unwrap();
        let (a, c, c2) = triple_scan(&rel).unwrap();
        assert_eq!(v.witness, vec![a.into(), c.into(), c2.into()]);
        assert!(v.reproduces(&rel.clone().into()).unwrap());
    }

    #[test]
    fn asymmetric_and_empty_failures_are_reported() {
        let table = OrthTable::from_fn(2, |a, c| !a.is_empty() && a.0 <= c.0).unwrap();
        let rel = FiniteRelation::explicit_raw(GroundSet::indexed(2), "raw", table).unwrap();
        let report = verify_finite_axioms(&rel, &Budget::default()).unwrap();
        let handle: OrthRelation = rel.into();
        for axiom in [Axiom::Symmetry, Axiom::EmptyOrthogonal, Axiom::UnionSplit] {
            let v = report
                .violation(axiom)
                .unwrap_or_else(|| panic!("missing {axiom}"));
            assert!(v.reproduces(&handle).unwrap());
        }
    }

    #[test]
    fn budget_is_distinct_from_failure() {
        let rel = FiniteRelation::disjointness(GroundSet::indexed(9));
        let err = verify_finite_axioms(&rel, &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        let handle: OrthRelation = rel.into();
        let pool: Vec<Subset> = (0..40u64).map(|m| PointSet(m * 7 % 512).into()).collect();
        let report = verify_axioms(&handle, &pool, CheckMode::Auto, &Budget::default()).unwrap();
        assert!(report.passed && !report.exhaustive);
    }

    #[test]
    fn reduced_system_agrees_with_full_system() {
        for seed in 0..60u64 {
            let rel = FiniteRelation::from_pair_fn(GroundSet::indexed(3), "p", |x, y| {
                (seed >> (x * 3 + y)) & 1 == 1
            });
            let full = verify_finite_axioms(&rel, &Budget::default()).unwrap();
            let reduced = verify_reduced_axioms(&rel, &Budget::default()).unwrap();
            assert_eq!(full.passed, reduced.passed);
        }
        let table =
            OrthTable::from_fn(2, |a, c| a.is_empty() || c.is_empty() || a.0 < c.0).unwrap();
        let rel = FiniteRelation::explicit_raw(GroundSet::indexed(2), "raw", table).unwrap();
        let reduced = verify_reduced_axioms(&rel, &Budget::default()).unwrap();
        let v = reduced.violation(Axiom::ReducedUnionSplit).unwrap();
        assert!(v.reproduces(&rel.into()).unwrap());
    }
}
