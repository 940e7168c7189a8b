//! Exact large-scale geometry on ℤ through eventually periodic sets.

mod epset;
mod oracle;
mod rules;

pub use epset::{Direction, EpSet, Term};
pub use oracle::{OracleVerdict, TruncatedOracle};
pub use rules::{
    affine_ends, corona_trace, directed_distance, ends_compactification_orth, group_orth,
    hausdorff_distance, is_bounded, ls_orth_metric, ls_orth_settheoretic, parallel_ends,
    parallel_sets, simple_ends_orth, AffineEnd, GroupDecision, Sides,
};

/// Orthogonality rules on ℤ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineRule {
    /// Intersections of `r`-dilations bounded for all `r`.
    Metric,
    /// Finite intersection.
    SetTheoretic,
    /// Finite translate-intersections for `F = [-k, k]`, `k <= f_cap`.
    Group { f_cap: u64 },
    /// No parallel affine ends.
    SimpleEnds,
    /// Disjoint closures on `{-∞, +∞}`.
    EndsCompactification,
    /// Induced by the resemblance "finite Hausdorff distance".
    Resemblance,
}

impl LineRule {
    pub fn orth(&self, a: &EpSet, c: &EpSet) -> bool {
        match *self {
            LineRule::Metric => ls_orth_metric(a, c),
            LineRule::SetTheoretic => ls_orth_settheoretic(a, c),
            LineRule::Group { f_cap } => group_orth(a, c, f_cap).orthogonal,
            LineRule::SimpleEnds => simple_ends_orth(a, c),
            LineRule::EndsCompactification => ends_compactification_orth(a, c),
            LineRule::Resemblance => crate::translate::LineResemblance::hausdorff().orth(a, c),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LineRule::Metric => "metric",
            LineRule::SetTheoretic => "set-theoretic",
            LineRule::Group { .. } => "group",
            LineRule::SimpleEnds => "simple-ends",
            LineRule::EndsCompactification => "ends-compactification",
            LineRule::Resemblance => "resemblance",
        }
    }

    /// Every rule here has the finite sets as its bounded sets.
    pub fn is_bounded(&self, a: &EpSet) -> bool {
        a.is_finite()
    }
}
