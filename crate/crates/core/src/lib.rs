//! Exact vertex cover for graphs of maximum degree 4, parameterized above the
//! `n/3` guarantee.

pub mod crown;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod solver;

pub use graph::{Graph, GraphError, VertexId, VertexSet};
pub use solver::{vc_decide, Decision, SolveError, Solver, SolverConfig};
