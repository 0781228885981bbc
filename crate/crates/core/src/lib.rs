//! Recognition and coloring of fork-free t-perfect graphs.
//!
//! A graph is t-perfect when its independent set polytope is cut out by the
//! vertex, edge and odd-cycle inequalities. On fork-free graphs this is
//! decided by a short pipeline of forbidden-structure checks
//! ([`recognize`]), and t-perfect fork-free graphs are 3-colorable by an
//! explicit partition around a five-hole ([`color`]). Two exponential oracles
//! check the pipeline independently at small orders: an exhaustive t-minor
//! search ([`tminor`]) and exact vertex enumeration of the polytope
//! ([`polytope`]).

pub mod canon;
pub mod color;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod holes;
pub mod io;
pub mod patterns;
pub mod polytope;
pub mod recognize;
pub mod tminor;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{GraphError, ParseError};
pub use graph::{Graph, VertexSet, MAX_ORDER};
