//! Sheaf cohomology, Castelnuovo–Mumford regularity and the level invariant for
//! coherent sheaves on projective space, computed exactly from graded module
//! presentations.

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod resolution;

pub use error::{Error, Result};
