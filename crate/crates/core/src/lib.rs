//! Exact chromatic polynomials and mean colour numbers, a family of graph
//! constructions whose mean colour number rises when a vertex loses edges,
//! a verifier for that family, and exhaustive small-graph hunts.

mod bitset;
pub mod cache;
pub mod canon;
pub mod chromatic;
pub mod construct;
pub(crate) mod decimal;
pub mod format;
pub mod graph;
pub mod mean;
pub mod poly;
pub mod rational;
pub mod verify;

pub use bitset::VertexSet;
pub use canon::{canonical_key, CanonicalKey};
pub use chromatic::{chromatic_polynomial, ChromaticEngine, EdgePolicy, EngineConfig};
pub use graph::{Graph, GraphError, VertexId};
pub use poly::{falling_factorial, FallingFactorialForm, IntPolynomial};
pub use rational::ExactRational;
