//! Degree-balanced spanning subgraphs of cubic graphs.
//!
//! Every cubic graph other than K4, K3,3 and 3K4 has a spanning subgraph in
//! which each degree 0..=3 occurs on `floor(n/4)` or `ceil(n/4)` vertices.
//! This crate builds such subgraphs constructively ([`decompose_balanced`]),
//! realizes the four finer target profiles behind that result
//! ([`decompose`]), and checks everything against an exhaustive oracle.

pub mod cli;
pub mod connected;
pub mod error;
pub mod gen;
pub mod general;
pub mod graph;
pub mod io;
pub mod oracle;

pub use error::{Error, ExceptionKind, Result, Statement};
pub use general::{decompose, decompose_balanced, decompose_two_regular, DecompositionResult};
pub use graph::{complement_within, profile_of, DegreeProfile, EdgeSubset, Graph};
