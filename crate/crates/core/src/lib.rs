//! List coloring: find a proper vertex coloring in which every vertex takes
//! a color from its own availability list, using as few distinct colors as
//! possible.
//!
//! Solvers:
//! - [`kgl`]: randomised greedy (k-GL),
//! - [`lc`]: maximal-independent-set heuristic (LC),
//! - [`elc`]: exact branch and bound with clique-seeded restarts (ELC, dcc),
//! - [`oracle`]: exhaustive search for small instances.
//!
//! [`bench`] runs experiment grids and renders tables and CSV.

pub mod bench;
pub mod dimacs;
pub mod elc;
mod error;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod kgl;
pub mod lc;
pub mod oracle;
mod outcome;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use instance::{validate_coloring, Color, Coloring, Instance};
pub use outcome::{SolveOutcome, Status};
