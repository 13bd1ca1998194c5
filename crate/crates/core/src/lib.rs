//! Exact invariants, peel colourings, and rainbow-neighbourhood analysis for
//! small graphs, plus a registry of machine-checked claims about them.
//!
//! Graphs are immutable and capped at 62 vertices; every vertex set is one
//! `u64` bitmask, and every solver is exact (no heuristics, no floating
//! point). The crate splits into:
//!
//! - [`graph`], [`graph6`]: the core representation and its text codec;
//! - [`generators`]: named families (set-graphs, paths, cycles, sunlets,
//!   thorn graphs, joins);
//! - [`invariants`]: clique, independence, and chromatic numbers with
//!   explicit work budgets;
//! - [`colourings`], [`rainbow`]: iterated peel colourings, minimum-colouring
//!   enumeration, and rainbow-neighbourhood counts;
//! - [`perfection`]: two independent perfection oracles;
//! - [`corpus`]: exhaustive and seeded-random graph streams;
//! - [`oracles`]: slow reference implementations used to cross-check the
//!   solvers;
//! - [`claims`]: the executable claim registry and conjecture search.

pub mod claims;
pub mod colourings;
pub mod corpus;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod oracles;
pub mod perfection;
pub mod rainbow;

pub use graph::{Graph, VertexSet};
