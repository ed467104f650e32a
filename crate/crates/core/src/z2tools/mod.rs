//! Equivariant tools: quotients and the cohomological index, Csorba's
//! graph, and explicit maps into cross-polytopes.

mod appendix;
mod csorba;
mod index;

use thiserror::Error;

use crate::complexes::ComplexError;

pub use appendix::{h_map_eval, lambda_map, lambda_of, sup_norm, SignedVertexMap};
pub use csorba::csorba_graph;
pub use index::{
    cohomological_index, cohomological_index_ordered, cohomological_index_via_quotient, quotient_complex,
    QuotientData,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Z2Error {
    #[error("complex carries no involution")]
    MissingInvolution,
    #[error("the empty complex has no index")]
    Empty,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
