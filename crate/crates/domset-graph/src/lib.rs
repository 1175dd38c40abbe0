//! Core graph machinery for the dominating-set toolkit.
//!
//! This crate owns the immutable [`Graph`] representation (compressed
//! adjacency), the [`LoopMultigraph`] used for derived graphs whose covers
//! yield dominating sets, benchmark ingestion ([`io`]), solution
//! verification, power graphs, and exact brute-force oracles ([`oracle`])
//! for desk-scale instances.

mod graph;
pub mod io;
mod multigraph;
pub mod oracle;
mod power;
mod set;
mod verify;

pub use graph::{Graph, GraphError, Node};
pub use multigraph::LoopMultigraph;
pub use power::power_graph;
pub use set::{SetKind, VertexSet};
pub use verify::{is_dominating, is_total_dominating, is_vertex_cover};
