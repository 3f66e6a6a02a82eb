//! Connected even factors of bounded maximum degree in squares of graphs.
//!
//! A [2,2s]-factor of `G^2` is a spanning connected subgraph whose degrees
//! are even and lie in `[2, 2s]`. The crate decides and constructs such
//! factors for graphs without induced subdivided stars `S(K_{1,2s+1})`,
//! and for graphs where every such star is anchored in a low-degree block.

pub mod graph;
pub mod harness;
pub mod io;
pub mod pattern;
pub mod solver;
pub mod trails;

pub use graph::{Graph, GraphError, VertexSet};
pub use solver::{solve, SolveError};
pub use trails::{EdgeSet, EvenFactor, Trail};
