//! Stabbed rectangle intersection representations.
//!
//! A *k-stabbed rectangle intersection representation* of a graph is a set of
//! axis-parallel closed rectangles, one per vertex, realizing adjacency by
//! intersection, together with `k` horizontal stab lines such that every
//! rectangle meets at least one line (SRIG mode) or exactly one (ESRIG mode).
//! The stab number / exact stab number of a graph is the least such `k`.
//!
//! This crate provides, with exact rational coordinates throughout:
//!
//! - a graph core with block-cut decomposition and separation predicates
//!   ([`graph`]),
//! - certifying interval-graph recognition and hitting-set machinery
//!   ([`interval`]),
//! - representation validation, exactification for `k <= 3`, stab-line
//!   extraction for equal-height rectangles, and pathwidth/coloring
//!   extraction ([`representation`]),
//! - constructions for grids, split graphs, and block graphs plus small
//!   bipartite fixtures ([`constructors`]),
//! - generators and representations for the extremal tree/block-graph
//!   families used to separate stab classes ([`families`]),
//! - certifying recognizers for 2-ESRIG block graphs and 3-ESRIG trees with
//!   verified asteroidal certificates ([`recognizers`]),
//! - an exhaustive small-graph oracle for stab and exact-stab numbers plus a
//!   census over all small trees/connected graphs ([`oracle`]).
//!
//! The `examples/` directory is the guided tour — one runnable example per
//! capability:
//!
//! ```text
//! cargo run --example grid_representation
//! cargo run --example recognize_trees
//! cargo run --example block_graphs
//! cargo run --example split_graphs
//! cargo run --example extremal_families
//! cargo run --example gap_tree
//! cargo run --example small_graph_oracle
//! cargo run --example tree_census
//! cargo run --example pathwidth_and_coloring
//! cargo run --example hitting_sets
//! ```
//!
//! A thin `stabkit` binary exposes the same functionality as subcommands
//! (`recognize`, `construct`, `family`, `validate`, `oracle`, `census`,
//! `svg`); see the README.

pub mod constructors;
pub mod error;
pub mod families;
pub mod graph;
pub mod interval;
pub mod oracle;
pub mod rat;
pub mod recognizers;
pub mod representation;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rat::Rational;
pub use representation::{Rect, StabMode, StabbedRepresentation};
