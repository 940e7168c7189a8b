//! A seeded collection of finite models for audits, and mutated tables that
//! break the axioms.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::models::{Bornology, EmbeddedPair, FiniteMetric, FiniteTopology};
use crate::relation::FiniteRelation;
use crate::set::{all_subsets, GroundSet, PointSet};
use crate::Result;

/// The constructor behind a corpus entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Bornology,
    Topology,
    Metric,
    EmbeddedSmallScale,
    EmbeddedLargeScale,
    PointPairs,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Bornology => "bornology",
            Family::Topology => "topology",
            Family::Metric => "metric",
            Family::EmbeddedSmallScale => "embedded-ss",
            Family::EmbeddedLargeScale => "embedded-ls",
            Family::PointPairs => "point-pairs",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub family: Family,
    pub relation: FiniteRelation,
    /// The topology the relation came from, for topological entries.
    pub topology: Option<FiniteTopology>,
}

/// Random preorder on `n` points as the smallest open sets of a topology.
pub fn random_topology(rng: &mut impl Rng, n: usize) -> Result<FiniteTopology> {
    let density = rng.gen_range(0.0..0.5);
    let mut reach: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| x == y || rng.gen_bool(density)).collect())
        .collect();
    for k in 0..n {
        for x in 0..n {
            for y in 0..n {
                if reach[x][k] && reach[k][y] {
                    reach[x][y] = true;
                }
            }
        }
    }
    let min_opens: Vec<PointSet> = reach
        .iter()
        .map(|row| PointSet::from_indices((0..n).filter(|&y| row[y])))
        .collect();
    FiniteTopology::from_min_opens(GroundSet::indexed(n), &min_opens)
}

fn random_subset(rng: &mut impl Rng, n: usize) -> PointSet {
    PointSet(rng.gen::<u64>()) & PointSet::full(n)
}

/// Per size `n ≤ max_n`: random bornologies, topologies, line metrics,
/// embedded pairs and point-pair relations, plus disjointness and the total
/// relation.
pub fn corpus(seed: u64, max_n: usize) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut push = |name: String,
                    family: Family,
                    relation: FiniteRelation,
                    topology: Option<FiniteTopology>| {
        out.push(CorpusEntry {
            name,
            family,
            relation,
            topology,
        })
    };
    for n in 1..=max_n {
        let g = GroundSet::indexed(n);
        push(
            format!("disjointness-{n}"),
            Family::Bornology,
            FiniteRelation::disjointness(g.clone()),
            None,
        );
        push(
            format!("total-{n}"),
            Family::Bornology,
            FiniteRelation::total(g.clone()),
            None,
        );
        for i in 0..5 {
            let b = Bornology::generated(g.clone(), [random_subset(&mut rng, n)])?;
            push(
                format!("bornology-{n}-{i}"),
                Family::Bornology,
                b.relation(),
                None,
            );
        }
        for i in 0..6 {
            let t = random_topology(&mut rng, n)?;
            push(
                format!("topology-{n}-{i}"),
                Family::Topology,
                t.relation(),
                Some(t),
            );
        }
        for i in 0..3 {
            let mut points: Vec<f64> = (0..n).map(|_| rng.gen_range(-100..100) as f64).collect();
            points.sort_by(f64::total_cmp);
            points.dedup();
            while points.len() < n {
                let next = points.last().copied().unwrap_or(0.0) + 1.0;
                points.push(next);
            }
            let m = FiniteMetric::on_line(&points)?;
            push(
                format!("metric-{n}-{i}"),
                Family::Metric,
                m.relation(),
                None,
            );
        }
        if n >= 2 {
            for i in 0..4 {
                let ambient = random_topology(&mut rng, n + 1)?;
                let inner = random_subset(&mut rng, n + 1).with(0);
                let pair = EmbeddedPair::new(ambient.clone(), inner)?;
                let (ss, ls) = pair.relations();
                push(
                    format!("embedded-ss-{n}-{i}"),
                    Family::EmbeddedSmallScale,
                    ss,
                    Some(ambient.clone()),
                );
                push(
                    format!("embedded-ls-{n}-{i}"),
                    Family::EmbeddedLargeScale,
                    ls,
                    Some(ambient),
                );
            }
        }
        for i in 0..4 {
            let density = rng.gen_range(0.1..0.9);
            let marks: Vec<Vec<bool>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_bool(density)).collect())
                .collect();
            let rel = FiniteRelation::from_pair_fn(g.clone(), "point pairs", |x, y| marks[x][y]);
            push(format!("pairs-{n}-{i}"), Family::PointPairs, rel, None);
        }
    }
    Ok(out)
}

/// How a table was broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// One pair flipped in both orders.
    SymmetricFlip,
    /// One entry flipped in a single order.
    OneSided,
    /// The empty set made non-orthogonal to some set.
    EmptyRow,
}

#[derive(Debug, Clone)]
pub struct MutatedTable {
    pub relation: FiniteRelation,
    pub mutation: Mutation,
    pub flipped: (PointSet, PointSet),
}

/// `count` explicit tables, each an axiom-passing relation with one entry
/// changed.
pub fn mutated_tables(seed: u64, count: usize, max_n: usize) -> Result<Vec<MutatedTable>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = corpus(seed, max_n)?;
    let kinds = [
        Mutation::SymmetricFlip,
        Mutation::OneSided,
        Mutation::EmptyRow,
    ];
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let entry = base
            .iter()
            .filter(|e| e.relation.n() >= 2)
            .collect::<Vec<_>>()
            .choose(&mut rng)
            .copied()
            .expect("corpus has relations on two points");
        let n = entry.relation.n();
        let mut table = entry.relation.to_table()?;
        let mutation = kinds[i % kinds.len()];
        let nonempty: Vec<PointSet> = all_subsets(n).filter(|s| !s.is_empty()).collect();
        // flipping a pair whose second set has two points always breaks the
        // union axiom: the answers on its singletons are untouched
        let wide: Vec<PointSet> = nonempty.iter().copied().filter(|s| s.len() >= 2).collect();
        let c = *wide.choose(&mut rng).expect("n ≥ 2");
        let flipped = match mutation {
            Mutation::EmptyRow => (PointSet::EMPTY, c),
            _ => {
                let candidates: Vec<PointSet> = if mutation == Mutation::OneSided {
                    nonempty.iter().copied().filter(|&a| a != c).collect()
                } else {
                    nonempty.clone()
                };
                (*candidates.choose(&mut rng).expect("n ≥ 2"), c)
            }
        };
        let (a, c) = flipped;
        match mutation {
            Mutation::OneSided => table.set(a, c, !table.get(a, c)),
            _ => table.flip_symmetric(a, c),
        }
        let relation = FiniteRelation::explicit_raw(
            entry.relation.ground().clone(),
            format!("{} with ({}, {}) flipped", entry.name, a.0, c.0),
            table,
        )?;
        out.push(MutatedTable {
            relation,
            mutation,
            flipped,
        });
    }
    Ok(out)
}
