//! Cylindrical algebraic decomposition via regular chains.
//!
//! The complex phase builds a tree-structured partition of ℂⁿ whose cells are
//! zero sets of squarefree regular systems; the real phase refines each
//! complex cell into semi-algebraic cells with sample points.

pub mod chains;
pub mod cylindrical;
pub mod error;
pub mod poly;
pub mod real;
pub mod separation;

pub use error::{Error, Result};
pub use poly::{Poly, Rational, VarOrder};
