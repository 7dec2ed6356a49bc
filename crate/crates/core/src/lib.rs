//! Peripherality-family graph indices.
//!
//! The crate computes the vertex and edge peripherality indices (`peri`,
//! `eperi`, `espr`), the Mostar and total Mostar indices, the Trinajstić index
//! `NT` and Albertson irregularity for simple connected graphs. Around that core
//! it provides the extremal graph families for these indices, an exhaustive
//! search over small isomorphism classes, and asymptotic / Monte-Carlo
//! experiments.
//!
//! ```
//! use periscope::{constructions, indices::ClosenessCounts};
//!
//! let p4 = constructions::path(4).unwrap();
//! let cc = ClosenessCounts::new(&p4).unwrap();
//! assert_eq!(cc.nt_graph().unwrap(), 10);
//! ```

pub mod cli;
pub mod constructions;
mod error;
pub mod experiments;
pub mod graph;
pub mod indices;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Bipartition, DistanceMatrix, Graph};
pub use indices::{ClosenessCounts, IndexKind, IndexReport};
