//! Gamma-graphs of small graphs: reconfiguration of minimum dominating
//! sets, exhaustive realizability search, and verification suites.
//!
//! The γ-graph of a graph `G` has the minimum dominating sets (γ-sets) of
//! `G` as vertices; two γ-sets are adjacent when they differ by a single
//! vertex (jump model) and, in the slide model, the two differing vertices
//! are additionally adjacent in `G`. This crate computes γ-sets and
//! γ-graphs for graphs on up to 64 vertices, enumerates small graphs and
//! free trees up to isomorphism, and drives exhaustive sweeps such as
//! "which bipartite graphs of order at most 9 have a γ-graph isomorphic to
//! K₂,₃?" (none do).
//!
//! ```
//! use gammagraph::{canon, families, gamma};
//!
//! let c4 = families::cycle(4).unwrap();
//! let gg = gamma::build_gamma_graph(&c4, gamma::Model::Slide);
//! let k24 = families::complete_bipartite(2, 4).unwrap();
//! assert!(canon::are_isomorphic(&gg.as_graph().unwrap(), &k24).unwrap());
//! ```
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --release --example gamma_basics
//! cargo run --release --example gamma_graph_of_c4
//! cargo run --release --example enumerate_classes
//! cargo run --release --example bipartite_realizability
//! cargo run --release --example disconnected_census
//! cargo run --release --example tree_bounds
//! cargo run --release --example observation_suites
//! ```
//!
//! The same functionality is reachable through the `gammagraph` binary;
//! see the crate README.

pub mod canon;
pub mod cli;
pub mod domination;
pub mod families;
pub mod gamma;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, contains_induced, CanonicalForm};
pub use domination::{
    closed_neighborhood, domination_number, enumerate_gamma_sets, is_dominating,
    open_neighborhood, private_neighbors, DominationReport, PrivateNeighborhood,
};
pub use gamma::{build_gamma_graph, jump_adjacent, slide_adjacent, GammaGraph, Model};
pub use gen::{generate_graphs, generate_trees};
pub use graph::{Bipartition, Diameter, Graph, VertexSet};
pub use graph6::{parse_graph6, write_graph6};
pub use search::{
    disconnected_gamma_graph_census, realizability_search, verify_main_theorem, SearchOutcome,
};
pub use verify::{check_tree_bounds, run_suite, tree_stats, BoundReport, Suite, TreeStats};
