//! Robustness analysis for fragmented networks.
//!
//! Graphs are undirected and simple, with logical vertex removal so ids stay
//! stable while a graph is attacked. On top of that sit path metrics,
//! betweenness centrality, fragmentation statistics, a damage measure
//! relative to a minimally reconnected reference, and attack simulation under
//! limited knowledge.
//!
//! The heavy kernels (per-source BFS, Brandes accumulation, attack campaigns)
//! run on rayon when the `parallel` feature is on. Results are bit-identical
//! to the sequential path.

pub mod attacks;
pub mod centrality;
pub mod damage;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod format;
pub mod fragmentation;
pub mod generators;
pub mod graph;
pub mod io;
pub mod paths;

pub use error::{
    DamageError, FragmentError, GenError, GraphError, MetricError, ParseError, ProfileError,
};
pub use exec::Exec;
pub use graph::{DiscoveredView, EdgeId, Graph, VertexId};
