//! Checkers for simplicial nonpositive-curvature conditions on finite flag
//! complexes: k-largeness, local k-largeness and m-location, disc-diagram
//! curvature audits, and contractibility certificates for downward links.
//!
//! Every check returns a [`Verdict`]; failures carry a concrete witness in
//! the coordinates of the complex that was checked.

pub mod complex;
pub mod contractibility;
pub mod diagrams;
pub mod error;
pub mod largeness;
pub mod location;
pub mod metric;
mod par;
pub mod verdict;

pub use complex::{Complex, Cycle, Generator, Simplex, Subcomplex, VertexId};
pub use error::{Error, Result};
pub use verdict::{Verdict, Witness};
