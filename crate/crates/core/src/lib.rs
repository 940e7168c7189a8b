//! Orthogonality relations on finite sets, on ℤ through eventually periodic
//! sets, and on truncated infinite graphs, together with the structures they
//! induce: topologies, proximities, neighborhood operators, quotients,
//! parallelism, scalar functions and boundaries at infinity.

pub mod boundary;
pub mod budget;
pub mod corpus;
pub mod error;
pub mod functions;
pub mod graph;
pub mod line;
pub mod maps;
pub mod models;
pub mod relation;
pub mod set;
pub mod topology;
pub mod translate;

pub use budget::Budget;
pub use error::{Error, Result};
