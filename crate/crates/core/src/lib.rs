//! Vertex-girth-regular graphs: girth-cycle counting, canonical labeling,
//! lower bounds, constructions and exhaustive generation.

pub mod bitset;
pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod cycles;
pub mod generator;
pub mod graph;
pub mod graph6;
pub mod report;

pub use bitset::{VertexSet, MAX_ORDER};
pub use cycles::{classify, girth, Classification, NotVgr, Signature, VgrProfile};
pub use generator::{find_extremal, generate_all, Extremal, GenerateError, GenerateOptions};
pub use graph::{Graph, GraphError};
