//! Continuity of maps, quotient relations and parallelism.

mod finite;
mod line;

pub use finite::{
    bounded_image_failure, continuity_check, mutually_parallel, orthogonal_image_failure,
    parallel_image_failure, parallel_maps, parallel_maps_witness, parallel_sets, parallel_witness,
    quotient_relation, universal_factor, ContinuityVerdict, Factorization, FiniteMap,
};
pub use line::{
    line_continuity, observable_family, parallel_line_maps, parallel_on_family,
    quantized_continuity, AffinePiece, EventuallyAffine, LineContinuity, MapParallelism,
    QuantizedMap,
};
