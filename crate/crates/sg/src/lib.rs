//! Homomorphisms and colourings of 2-edge-coloured graphs.
//!
//! The crate models simple graphs with signed edges, decides sign-preserving
//! homomorphisms by backtracking with forward checking, computes the exact
//! two-condition chromatic number, constructs the fixed 9-, 10- and
//! 11-vertex targets together with the two 5-vertex obstructions, and turns
//! the case analysis behind the 10-colour bound for connected cubic graphs
//! into an executable algorithm with a desk-scale sweep harness.

pub mod bound10;
pub mod canon;
pub mod colouring;
pub mod embed;
pub mod error;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod hom;
pub mod targets;

pub use error::SgError;
pub use graph::{Sign, SignedGraph, VertexClass};
