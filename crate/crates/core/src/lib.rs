//! Lossy kernels for connected distance-r domination on bounded-expansion
//! graph classes, with exact reference solvers for small instances.

pub mod closure;
pub mod core_finder;
pub mod domset;
pub mod error;
pub mod graph;
pub mod hardness;
pub mod oracles;
pub mod order;
pub mod pipeline;
pub mod projections;
pub mod ratio;
pub mod steiner;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use ratio::Rational;
