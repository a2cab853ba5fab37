//! Feedback vertex sets of subcubic and planar girth-five graphs.
//!
//! This crate is `no_std` (it needs `alloc`). It holds the graph model and
//! structural predicates, the `F(i, j)` graph families with their error
//! terms, an exact minimum feedback vertex set solver, and the two
//! constructive solvers that emit a feedback vertex set together with a
//! certificate that its size is within `(2m - n + 2)/7 + r(G)`.
//!
//! IO, enumeration, and the command line live in the `fvslab` crate.
#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

pub mod canon;
pub mod construct;
pub mod error;
pub mod exact;
pub mod family;
pub mod graph;
pub mod named;
pub mod ops;
pub mod planarity;
pub mod sevenths;
pub mod structure;
pub mod subdivision;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use sevenths::Sevenths;
