//! Exact minimum-rank computations for graphs over small prime fields.
//!
//! The engine enumerates the symmetric matrices whose off-diagonal
//! zero/nonzero pattern matches a graph, computes the minimum rank and the
//! rank-attaining matrices with their column-space classes, analyses how an
//! embedded subgraph's rank behaves under extension (rank-preserving
//! tables, increase profiles, optimal triples), reduces across cut
//! vertices, and exhaustively regenerates minimal forbidden-subgraph
//! catalogs with per-member certificates.

pub mod canon;
pub mod embedding;
pub mod error;
pub mod field;
pub mod forbidden;
pub mod gf2;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod minrank;

pub use error::{Error, Result};

/// Engine version recorded in catalog files and cache entries.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
