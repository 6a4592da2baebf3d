//! Toolkit for the graph burning problem.
//!
//! A burning sequence `(s_1, ..., s_k)` burns a graph if every vertex is
//! within distance `k - i` of some `s_i`; the burning number `b(G)` is the
//! shortest such sequence. Finding it is NP-hard, so the crate pairs fast
//! farthest-first approximation solvers ([`solver`]) with an exact
//! branch-and-prune search for small instances ([`exact`]), plus the
//! supporting cast: graph types, parsers, generators, all-pairs distances,
//! sequence verification, and a benchmark harness.

pub mod bench;
pub mod distance;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod io;
pub mod sequence;
pub mod solver;

mod util;

pub use distance::{apsp, Dist, DistanceMatrix};
pub use graph::{Graph, VertexSet};
pub use sequence::{simulate, verify, BurningSequence};
pub use solver::{bgp, bgp_plus, SolveResult, TieBreak};
