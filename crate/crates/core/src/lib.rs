//! Complete homogeneous symmetric (CHS) norms of simple graphs.
//!
//! `‖G‖_d = h_d(λ_1, …, λ_n)^{1/d}` for even `d`, where `h_d` is the complete
//! homogeneous symmetric polynomial and `λ_i` are the adjacency eigenvalues.
//! Every norm is available two ways: in floating point from the spectrum, and
//! exactly as a rational from closed-walk counts. The [`analysis`] module uses
//! the exact values to check extremal results exhaustively on small orders.

pub mod analysis;
pub mod chs;
pub mod graph;
pub mod io;
pub mod partitions;
pub mod rational;
pub mod spectra;
pub mod walks;

pub use chs::{chs_norm, ChsError, NormReport};
pub use graph::{family, FamilyId, Graph, GraphError};
pub use rational::ExactRational;
pub use spectra::{eigenvalues, Spectrum};
