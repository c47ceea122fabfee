//! Reachability in directed layered grid graphs with a small memory
//! footprint.
//!
//! The graph lives on the `(n+1) x (n+1)` lattice; every edge points one step
//! north or east. [`engine::reach`] answers s-t queries by recursing over a
//! block decomposition and walking an implicit auxiliary graph with a
//! marker-array depth-first search. [`oracle::oracle_reach`] is the plain
//! breadth-first reference.

pub mod auxgraph;
pub mod cli;
pub mod engine;
pub mod error;
pub mod format;
pub mod generate;
pub mod grid;
pub mod metrics;
pub mod oracle;

pub use engine::{choose_k, reach, Answer, EngineConfig, KSchedule};
pub use error::{Error, Result};
pub use format::{emit_lgg, parse_lgg};
pub use generate::{gen_family, gen_random, Family};
pub use grid::{GraphBuilder, LayeredGridGraph, SubgridView, Vertex};
pub use metrics::{Bounds, Metrics};
pub use oracle::oracle_reach;
