//! Graph interchange: graph6 records and a plain 1-based edge list.

mod edge_list;
mod graph6;

pub use edge_list::{emit_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_checked, Graph6Error, Graph6Record};
