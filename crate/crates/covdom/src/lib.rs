//! Constructions and exact computations around k-fold covers of graphs
//! and their domination parameters.
//!
//! The crate provides:
//!
//! - [`graph`]: simple undirected graphs, named generators (cycles, paths,
//!   Petersen, dodecahedron, grids, Cartesian products), graph6 and
//!   edge-list text I/O.
//! - [`cover`]: permutation voltage assignments, lift construction,
//!   verification of arbitrary covering projections, fibers and subgraph
//!   preimages.
//! - [`domsolve`]: verifiers and exact branch-and-bound solvers for the
//!   domination, total domination and connected domination numbers, a
//!   brute-force oracle, the max-white-count greedy heuristic with its
//!   full trace, and efficient-dominating-set machinery.
//! - [`bounds`]: every cover bound as an exact rational, constructive
//!   witnesses for the two upper bounds (fiber lifts; the tree-lift
//!   connector), and a sandwich checker that pins exact values between
//!   all applicable bounds.
//! - [`harness`]: seeded random-lift experiments for the ratio
//!   `gamma(G) / (k * gamma(F))`, the named fixture registry, and JSONL
//!   persistence of experiment records.

pub mod bitset;
pub mod bounds;
pub mod cover;
pub mod domsolve;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, GraphStats};
