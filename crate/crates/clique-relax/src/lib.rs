//! Exact combinatorial toolkit for clique relaxations: distance-based
//! (s-club, s-clique) and degree-based (gamma-complete subgraph) cluster
//! problems, the polynomial forest algorithm, hardness-gadget instance
//! generators with role-labeled back-maps, and machine checkers that audit
//! every finite claim the gadgets rely on.

pub mod bitset;
pub mod graph;
pub mod io;
pub mod problem;
pub mod ratio;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use bitset::VertexSet;
pub use graph::{EliminationOrder, Graph, GraphStats, INF};
pub use problem::{verify_predicate, verify_solution, ProblemSpec, SolveOutcome};
pub use ratio::Ratio;
