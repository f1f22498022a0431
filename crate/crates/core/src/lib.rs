//! Graph decompositions, clustered edge-colorings and induced-minor oracles.
//!
//! The crate is organised by subsystem:
//!
//! - [`graph`]: the [`Graph`] type, BFS layerings, weak diameters,
//!   contractions, strong products, subdivisions and generators.
//! - [`decomposition`]: exact and heuristic treewidth, tree decompositions
//!   and tree-partitions.
//! - [`coloring`]: edge-colorings, clustering statistics and the
//!   tree-partition / product-structure 3-colorings.
//! - [`kpr`]: iterated BFS decompositions, the recursive clustered coloring
//!   built on them, and extraction of induced-minor witnesses.
//! - [`sparsifier`]: contraction–uncontraction sparsification of color classes.
//! - [`minors`]: minor and induced-minor models, validation and search.
//! - [`experiment`]: configuration, pipelines and CSV output.

pub mod coloring;
pub mod decomposition;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod kpr;
pub mod minors;
pub mod sparsifier;

pub use error::{Error, Result};
pub use graph::Graph;
