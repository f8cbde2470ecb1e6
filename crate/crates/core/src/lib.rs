//! Exact invariants of small graphs centred on the bound
//! `chi(G) <= max over induced H of |V(H)| - 2*alpha(H) + 2`.
//!
//! Graphs live in machine-word bit masks (at most [`MAX_VERTICES`] vertices).
//! Every solver is exact and returns a certificate; budgets make exhaustion
//! an explicit error instead of a silent truncation.

pub mod budget;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod exploration;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod proof;
pub mod solvers;
pub mod subsets;

pub use budget::SolverBudget;
pub use error::{Error, Result};
pub use graph::{Graph, VertexMap, VertexSet, MAX_VERTICES};
pub use solvers::ColoringCertificate;
