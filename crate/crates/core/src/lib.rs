//! Maximum vertex-disjoint triangle packing in interval graphs.
//!
//! An interval instance is swept into its maximal cliques, ordered so that
//! every vertex occupies a contiguous run of cliques. A dynamic program then
//! walks the cliques left to right, tracking which (at most two) vertices of
//! the current clique are still uncovered. The run time is proportional to
//! Σ|C_i|²·|C_{i+1}|², which is O(n⁵).

pub mod bench;
pub mod cli;
pub mod dp;
pub mod error;
pub mod gen;
pub mod graph;
pub mod oracle;

pub use dp::{solve, BoundaryState, Solution, Triangle, TrianglePacking};
pub use error::{Error, Result};
pub use graph::{
    build_overlap_graph, sweep_maximal_cliques, validate_arrangement, AdjacencyGraph,
    CliqueArrangement, IntervalInstance, VertexId,
};
