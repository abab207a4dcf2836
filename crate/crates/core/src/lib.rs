//! Exact clique-minor and fractional Hadwiger computations on small graphs.

mod bits;
pub mod bounds;
pub mod bramble;
pub mod construct;
pub mod error;
pub mod fractional;
pub mod graph;
pub mod lp;
pub mod minor;
pub mod rational;
pub mod width;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use rational::Rational;
