//! Majorization, separating singularly cospectral pairs, and exhaustive
//! verification of the extremal and bound results for CHS norms.

mod bounds;
mod distinguish;
mod enumerate;
mod extremal;
mod majorization;

use thiserror::Error;

use crate::chs::ChsError;
use crate::graph::GraphError;
use crate::spectra::SpectraError;

pub use bounds::{check_theorem3, matching_constant, BoundCheck, BOUND_TOLERANCE};
pub use distinguish::{distinguish, make_pair, Distinction, DEFAULT_D_MAX};
pub use enumerate::{
    enumerate_connected, enumerate_connected_indexed, enumerate_trees, enumerate_trees_indexed, prufer_tree,
    tree_count, Shard, MAX_CONNECTED_ORDER, MAX_TREE_ORDER,
};
pub use extremal::{sweep, verify_theorem2, ExtremalReport, Mode, SweepConfig, SweepOutcome, SAMPLE_LIMIT};
pub use majorization::{majorizes, MajorizationWitness};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("graphs have different orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("graphs are not singularly cospectral: closed walks of length {power} differ")]
    NotSingularlyCospectral { power: usize },
    #[error("input graph is bipartite")]
    BipartiteInput,
    #[error("order {0} is too small")]
    OrderTooSmall(usize),
    #[error("order {n} exceeds the enumeration limit {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("invalid shard {index}/{count}")]
    InvalidShard { index: u64, count: u64 },
    #[error("extremal violation: {0}")]
    ExtremalViolation(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Chs(#[from] ChsError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
