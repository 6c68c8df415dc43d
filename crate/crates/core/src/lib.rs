//! Exact matroid computation on ground sets of at most 16 elements.
//!
//! A matroid is stored as its full rank table, giving O(1) rank queries and
//! making every derived query (circuits, flats, connectivity, minors,
//! isomorphism) an exact exhaustive computation. On top of the core sit
//! recognizers for spikes and two independent deciders for membership in
//! the class of spikes and their minors.
//!
//! All arithmetic is exact integer arithmetic; there is no floating point
//! anywhere in the crate.

pub mod analysis;
pub mod catalog;
mod error;
mod matroid;
pub mod minors;
mod set;
pub mod spike;
pub mod transforms;

pub use error::{Error, Result};
pub use matroid::{AxiomReport, AxiomViolation, Matroid};
pub use set::{ElementSet, CAPACITY};
