//! Orthogonality relations over finite, symbolic-line and graph-ball ground
//! sets, plus the axiom and separation checkers.

mod axioms;
mod dot;
mod finite;
mod separation;

use std::sync::Arc;

pub use axioms::{
    verify_axioms, verify_finite_axioms, verify_reduced_axioms, Axiom, AxiomReport, CheckMode,
    Violation,
};
pub use dot::{
    check_dot_axioms, dot_duality, from_dot, reduce_to_basic, BasicDot, DotProduct, IntersectionDot,
};
pub use finite::{
    FiniteBackend, FiniteRelation, OrthTable, PairMatrix, ScaleClass, MAX_TABLE_POINTS,
};
pub use separation::{
    separation_profile, span_witness, span_witness_exhaustive, Property, SeparationFailure,
    SeparationProfile,
};

use crate::graph::{GraphBall, GraphRule, VertexSet};
use crate::line::{EpSet, LineRule};
use crate::set::PointSet;
use crate::{Error, Result};

/// A subset of whichever ground set a relation lives on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subset {
    Points(PointSet),
    Line(EpSet),
    Vertices(VertexSet),
}

impl Subset {
    pub fn kind(&self) -> &'static str {
        match self {
            Subset::Points(_) => "finite",
            Subset::Line(_) => "symbolic-line",
            Subset::Vertices(_) => "graph-ball",
        }
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        Ok(match (self, other) {
            (Subset::Points(a), Subset::Points(b)) => Subset::Points(*a | *b),
            (Subset::Line(a), Subset::Line(b)) => Subset::Line(a.union(b)),
            (Subset::Vertices(a), Subset::Vertices(b)) => Subset::Vertices(a.union(b)),
            _ => {
                return Err(Error::SubsetKind {
                    backend: self.kind(),
                    found: other.kind(),
                })
            }
        })
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Subset::Points(a) => a.is_empty(),
            Subset::Line(a) => a.is_empty(),
            Subset::Vertices(a) => a.is_empty(),
        }
    }
}

impl From<PointSet> for Subset {
    fn from(s: PointSet) -> Subset {
        Subset::Points(s)
    }
}

impl From<EpSet> for Subset {
    fn from(s: EpSet) -> Subset {
        Subset::Line(s)
    }
}

impl From<VertexSet> for Subset {
    fn from(s: VertexSet) -> Subset {
        Subset::Vertices(s)
    }
}

/// A large-scale rule on eventually periodic subsets of ℤ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineRelation {
    pub rule: LineRule,
}

impl LineRelation {
    pub fn new(rule: LineRule) -> LineRelation {
        LineRelation { rule }
    }

    pub fn orth(&self, a: &EpSet, c: &EpSet) -> bool {
        self.rule.orth(a, c)
    }
}

/// A rule evaluated inside an explored graph ball at fixed scales.
#[derive(Debug, Clone)]
pub struct GraphRelation {
    pub ball: Arc<GraphBall>,
    pub rule: GraphRule,
}

impl GraphRelation {
    pub fn orth(&self, a: &VertexSet, c: &VertexSet) -> Result<bool> {
        self.rule.orth(&self.ball, a, c)
    }
}

/// Handle over every backend.
#[derive(Debug, Clone)]
pub enum OrthRelation {
    Finite(FiniteRelation),
    Line(LineRelation),
    Graph(GraphRelation),
}

impl From<FiniteRelation> for OrthRelation {
    fn from(r: FiniteRelation) -> OrthRelation {
        OrthRelation::Finite(r)
    }
}

impl From<LineRelation> for OrthRelation {
    fn from(r: LineRelation) -> OrthRelation {
        OrthRelation::Line(r)
    }
}

impl From<GraphRelation> for OrthRelation {
    fn from(r: GraphRelation) -> OrthRelation {
        OrthRelation::Graph(r)
    }
}

impl OrthRelation {
    fn backend_name(&self) -> &'static str {
        match self {
            OrthRelation::Finite(_) => "finite",
            OrthRelation::Line(_) => "symbolic-line",
            OrthRelation::Graph(_) => "graph-ball",
        }
    }

    fn mismatch(&self, s: &Subset) -> Error {
        Error::SubsetKind {
            backend: self.backend_name(),
            found: s.kind(),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteRelation> {
        match self {
            OrthRelation::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// The whole ground set as a subset.
    pub fn full(&self) -> Subset {
        match self {
            OrthRelation::Finite(r) => Subset::Points(r.full()),
            OrthRelation::Line(_) => Subset::Line(EpSet::all()),
            OrthRelation::Graph(g) => Subset::Vertices(g.ball.all_vertices()),
        }
    }

    pub fn empty(&self) -> Subset {
        match self {
            OrthRelation::Finite(_) => Subset::Points(PointSet::EMPTY),
            OrthRelation::Line(_) => Subset::Line(EpSet::empty()),
            OrthRelation::Graph(g) => Subset::Vertices(g.ball.no_vertices()),
        }
    }

    /// Whether `a ⊥ c`.
    pub fn orth(&self, a: &Subset, c: &Subset) -> Result<bool> {
        match (self, a, c) {
            (OrthRelation::Finite(r), Subset::Points(a), Subset::Points(c)) => r.try_orth(*a, *c),
            (OrthRelation::Line(r), Subset::Line(a), Subset::Line(c)) => Ok(r.orth(a, c)),
            (OrthRelation::Graph(r), Subset::Vertices(a), Subset::Vertices(c)) => {
                r.ball.check_vertices(a)?;
                r.ball.check_vertices(c)?;
                r.orth(a, c)
            }
            (_, Subset::Points(_), Subset::Points(_))
            | (_, Subset::Line(_), Subset::Line(_))
            | (_, Subset::Vertices(_), Subset::Vertices(_)) => Err(self.mismatch(a)),
            (_, a, c) => Err(if a.kind() == self.backend_name() {
                self.mismatch(c)
            } else {
                self.mismatch(a)
            }),
        }
    }

    /// Whether `b` is orthogonal to the whole ground set.
    pub fn is_bounded(&self, b: &Subset) -> Result<bool> {
        self.orth(b, &self.full())
    }

    /// Points whose singletons are bounded (finite backends only).
    pub fn bounded_points(&self) -> Result<Subset> {
        match self {
            OrthRelation::Finite(r) => Ok(Subset::Points(r.bounded_points())),
            _ => Err(Error::pre("bounded_points needs a finite backend")),
        }
    }

    /// Scale classification; the symbolic line rules all make finite sets
    /// bounded and are therefore large scale.
    pub fn scale_class(&self) -> Result<ScaleClass> {
        match self {
            OrthRelation::Finite(r) => Ok(r.scale_class()),
            OrthRelation::Line(r) => {
                let singleton = EpSet::finite([0]);
                if r.orth(&singleton, &EpSet::all()) {
                    Ok(ScaleClass::Large)
                } else {
                    Ok(ScaleClass::Neither)
                }
            }
            OrthRelation::Graph(_) => Err(Error::pre(
                "scale classes are not decided inside a truncated graph ball",
            )),
        }
    }
}
