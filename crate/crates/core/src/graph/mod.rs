//! Truncated exploration of infinite graphs.

mod ball;
mod ends;
mod hyperbolic;

use num_rational::Rational64;

pub use ball::{
    GraphBall, GraphGenerator, Vertex, VertexSet, MAX_BALL_VERTICES, MAX_PAIR_TABLE_VERTICES,
};
pub use ends::{
    end_count, end_count_over, freudenthal, freudenthal_orth, higson_evidence, Components,
    EndProfile, FreudenthalVerdict, HigsonEvidence,
};
pub use hyperbolic::{
    delta_estimate, gromov_product, hyperbolic_orth, DeltaEstimate, HyperbolicVerdict,
};

use crate::{Error, Result};

/// Orthogonality rules evaluated inside a ball.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphRule {
    /// `sup ⟨a, c⟩_p < r`.
    Hyperbolic { basepoint: usize, r: Rational64 },
    /// No component outside the radius-`k` ball meets both sets.
    Freudenthal { k: u32 },
    /// Finite-scale evidence; inconclusive answers are errors.
    Higson { r: u32, k: u32 },
}

impl GraphRule {
    pub fn orth(&self, ball: &GraphBall, a: &VertexSet, c: &VertexSet) -> Result<bool> {
        match *self {
            GraphRule::Hyperbolic { basepoint, r } => {
                Ok(hyperbolic_orth(ball, a, c, basepoint, r)?.orthogonal_at_r)
            }
            GraphRule::Freudenthal { k } => Ok(freudenthal_orth(ball, a, c, k)?.separated),
            GraphRule::Higson { r, k } => match higson_evidence(ball, a, c, r, k)? {
                HigsonEvidence::Separated => Ok(true),
                HigsonEvidence::NotSeparated => Ok(false),
                HigsonEvidence::Inconclusive => Err(Error::Uncertified(
                    "higson separation".into(),
                    format!("dilations at r = {r} meet between radius {k} and the collar"),
                )),
            },
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GraphRule::Hyperbolic { .. } => "hyperbolic",
            GraphRule::Freudenthal { .. } => "freudenthal",
            GraphRule::Higson { .. } => "higson",
        }
    }
}
