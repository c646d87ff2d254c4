//! Kernels, semi-kernels, Grundy and semi-Grundy functions on finite digraphs.
//!
//! The crate provides polynomial checkers, exhaustive solvers for the
//! (NP-complete) existence questions, constructive algorithms on cartesian
//! sums and cartesian products of digraphs, the `R_n` family with two Grundy
//! functions of arbitrarily distant maxima, and an exhaustive explorer over
//! small digraphs.

pub mod checkers;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod explorer;
pub mod io;
pub mod rn;
pub mod solvers;

pub use digraph::{mex, Digraph, ValueMap, VertexSet};
pub use error::{Error, Result};
pub use solvers::{SolveResult, Witness};
