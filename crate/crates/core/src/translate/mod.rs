//! Translations between orthogonality relations and proximities,
//! neighborhood operators and asymptotic resemblances.

mod nbhd;
mod proximity;
mod resemblance;

pub use nbhd::{
    disjoint_pairs_span, nbhd_to_orth, orth_to_nbhd, sub_operator, NbhdAxiom, NbhdViolation,
    NeighborhoodOperator,
};
pub use proximity::{orth_to_proximity, proximity_to_orth, Proximity, ProximityViolation};
pub use resemblance::{
    resemblance_to_orth, FiniteResemblance, LineResemblance, ResemblanceAxiom, ResemblanceViolation,
};
