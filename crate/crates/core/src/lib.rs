//! Circularly ordered graphs, forbidden ordered patterns, ordering search and
//! circular chromatic number.
//!
//! Graphs are small (at most 64 vertices, and in practice far fewer): every
//! decision procedure here is an exhaustive search, tuned to answer questions
//! about all graphs up to seven or so vertices in seconds.

pub mod chromatic;
pub mod circular_order;
mod code;
pub mod constructive;
pub mod error;
pub mod families;
pub mod graph;
pub mod par;
pub mod patterns;
pub mod reduction;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, Rational};
