//! Reduction from cubic vertex cover to upper-bounded well-balanced and
//! best-balanced graph orientation, with connectivity-based checkers and
//! brute-force oracles for small instances.

pub mod balance;
pub mod connectivity;
pub mod dot;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod orientation;
pub mod reduction;

pub use error::{Error, Result};
pub use graph::{ArcId, EdgeId, MixedGraph, VertexId, VertexSet};
pub use orientation::Orientation;
