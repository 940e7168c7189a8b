//! The two-point compactification of ℤ and its large-scale checks.

use super::finite::LsCompactness;
use super::lattice::{lattice_close, ObservableLattice, Observer};
use crate::line::{Direction, EpSet};
use crate::relation::LineRelation;
use crate::{Error, Result};

/// The lattice generated by `ℕ` and `−ℕ`.
pub fn ends_lattice(rel: &LineRelation, cap: usize) -> Result<ObservableLattice<EpSet>> {
    lattice_close(rel, [EpSet::naturals(), EpSet::negative_naturals()], cap)
}

/// Candidate compactifications of ℤ by adding ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineCompactification {
    /// `ℤ ∪ {−∞, +∞}`.
    Ends,
    /// `ℤ ∪ {∞}`, both tails converging to the same point.
    GluedEnds,
}

/// A point of the added boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum End {
    Minus,
    Plus,
    Glued,
}

impl LineCompactification {
    pub fn ends(&self) -> Vec<End> {
        match self {
            LineCompactification::Ends => vec![End::Minus, End::Plus],
            LineCompactification::GluedEnds => vec![End::Glued],
        }
    }

    /// Ends in the closure of `c`.
    pub fn closure_ends(&self, c: &EpSet) -> Vec<End> {
        match self {
            LineCompactification::Ends => {
                let mut ends = Vec::new();
                if c.left_unbounded() {
                    ends.push(End::Minus);
                }
                if c.right_unbounded() {
                    ends.push(End::Plus);
                }
                ends
            }
            LineCompactification::GluedEnds => {
                if c.is_finite() {
                    Vec::new()
                } else {
                    vec![End::Glued]
                }
            }
        }
    }

    /// A basic neighbourhood of `end` must contain one of these tails.
    fn required_tails(&self, end: End) -> Vec<Direction> {
        match end {
            End::Minus => vec![Direction::Left],
            End::Plus => vec![Direction::Right],
            End::Glued => vec![Direction::Left, Direction::Right],
        }
    }
}

fn has_tail(s: &EpSet, direction: Direction) -> bool {
    let rest = s.complement();
    match direction {
        Direction::Right => !rest.right_unbounded(),
        Direction::Left => !rest.left_unbounded(),
        Direction::Both => rest.is_finite(),
    }
}

/// Checks over a family of sets on the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCompactificationReport {
    pub family_size: usize,
    /// A set whose boundedness differs from finiteness.
    pub bornology_mismatch: Option<EpSet>,
    /// A pair whose orthogonality disagrees with its closures.
    pub closure_mismatch: Option<(EpSet, EpSet)>,
    pub ls_compact: LsCompactness,
    /// A member and an end outside its closure that cannot be separated.
    pub separation_failure: Option<(EpSet, End)>,
}

impl LineCompactificationReport {
    pub fn passes(&self) -> bool {
        self.bornology_mismatch.is_none()
            && self.closure_mismatch.is_none()
            && self.ls_compact.compact
    }
}

/// Finite sets are clopen and ℤ is dense in both candidates; condition 2
/// reads `C ⊥ D ⟺` no shared closure end and `C ∩ D` bounded.
pub fn verify_line_compactification(
    rel: &LineRelation,
    candidate: LineCompactification,
    family: &[EpSet],
) -> Result<LineCompactificationReport> {
    let bornology_mismatch = family
        .iter()
        .find(|a| rel.is_bounded(a) != a.is_finite())
        .cloned();
    let mut closure_mismatch = None;
    'pairs: for c in family {
        let ce = candidate.closure_ends(c);
        for d in family {
            let shared = candidate.closure_ends(d).iter().any(|e| ce.contains(e));
            let predicted = !shared && rel.is_bounded(&c.intersection(d));
            if rel.orth(c, d) != predicted {
                closure_mismatch = Some((c.clone(), d.clone()));
                break 'pairs;
            }
        }
    }
    let tails: Vec<LineOpen> = candidate
        .ends()
        .into_iter()
        .map(|e| {
            let set = match e {
                End::Minus => EpSet::negative_naturals(),
                End::Plus => EpSet::naturals(),
                End::Glued => EpSet::all(),
            };
            LineOpen { set, ends: vec![e] }
        })
        .collect();
    let ls_compact = ls_compact_check(
        LineSpace::Compactified(candidate),
        &LineCover {
            opens: tails,
            with_singletons: true,
        },
    )?;
    let separation_failure = family.iter().find_map(|c| {
        let ce = candidate.closure_ends(c);
        candidate
            .ends()
            .into_iter()
            .filter(|e| !ce.contains(e))
            .find(|&e| !separable(candidate, c, e))
            .map(|e| (c.clone(), e))
    });
    Ok(LineCompactificationReport {
        family_size: family.len(),
        bornology_mismatch,
        closure_mismatch,
        ls_compact,
        separation_failure,
    })
}

/// A closed set `C̄` and an end outside it have disjoint neighbourhoods
/// when a tail towards the end misses `C`; the separating tail starts past
/// the last point of `C` on that side.
fn separable(candidate: LineCompactification, c: &EpSet, end: End) -> bool {
    candidate.required_tails(end).into_iter().all(|direction| {
        let side = match direction {
            Direction::Right => c.intersection(&EpSet::naturals()),
            _ => c.intersection(&EpSet::negative_naturals()),
        };
        match side.finite_points() {
            Some(points) => {
                let past = match direction {
                    Direction::Right => points.iter().max().map_or(0, |m| m + 1),
                    _ => points.iter().min().map_or(0, |m| m - 1),
                };
                let tail = match direction {
                    Direction::Right => EpSet::naturals().translate(past),
                    _ => EpSet::negative_naturals().translate(past),
                };
                !tail.intersects(c)
            }
            None => false,
        }
    })
}

/// Spaces built on ℤ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineSpace {
    Discrete,
    Compactified(LineCompactification),
}

impl LineSpace {
    fn ends(&self) -> Vec<End> {
        match self {
            LineSpace::Discrete => Vec::new(),
            LineSpace::Compactified(c) => c.ends(),
        }
    }
}

/// An open set: a subset of ℤ plus some ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineOpen {
    pub set: EpSet,
    pub ends: Vec<End>,
}

/// A cover given by finitely many opens, optionally together with every
/// singleton of ℤ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCover {
    pub opens: Vec<LineOpen>,
    pub with_singletons: bool,
}

/// Large-scale compactness against a cover, with finite sets of ℤ as the
/// bornology: some finite subfamily must leave a bounded residual.
pub fn ls_compact_check(space: LineSpace, cover: &LineCover) -> Result<LsCompactness> {
    let space_ends = space.ends();
    for open in &cover.opens {
        for e in &open.ends {
            let LineSpace::Compactified(c) = space else {
                return Err(Error::invalid(
                    "an open contains an end of the discrete line",
                ));
            };
            if !space_ends.contains(e) {
                return Err(Error::invalid(format!("{e:?} is not a point of the space")));
            }
            if !c
                .required_tails(*e)
                .into_iter()
                .all(|d| has_tail(&open.set, d))
            {
                return Err(Error::invalid(format!(
                    "{} is not a neighbourhood of {e:?}",
                    open.set
                )));
            }
        }
    }
    if let Some(e) = space_ends
        .iter()
        .find(|e| !cover.opens.iter().any(|o| o.ends.contains(e)))
    {
        return Err(Error::pre(format!("the cover misses the end {e:?}")));
    }
    let covered = cover
        .opens
        .iter()
        .fold(EpSet::empty(), |acc, o| acc.union(&o.set));
    let residual = covered.complement();
    if !cover.with_singletons {
        if !residual.is_empty() {
            return Err(Error::pre(format!("the cover misses {residual}")));
        }
        return Ok(LsCompactness {
            compact: true,
            reason: "finitely many opens: the whole cover leaves an empty residual".to_string(),
        });
    }
    Ok(if residual.is_finite() {
        LsCompactness {
            compact: true,
            reason: format!("the listed opens leave the bounded residual {residual}"),
        }
    } else {
        LsCompactness {
            compact: false,
            reason: format!(
                "every finite subfamily leaves all but finitely many points of the infinite set {residual}"
            ),
        }
    })
}
