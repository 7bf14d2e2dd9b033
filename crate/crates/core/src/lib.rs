//! Exact longest-path transversal laboratory for small graphs.
//!
//! Everything here is brute force by intent: graphs are tiny (at most 16
//! vertices for the exact routines), and each result is meant to serve as
//! an oracle for checking structural statements about longest paths.

pub mod bpg;
pub mod catalog;
pub mod chordal;
pub mod cut;
mod error;
pub mod graph;
pub mod graph6;
pub mod paths;
pub mod substar;
pub mod transversal;
pub mod treedecomp;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use paths::{LongestPathSet, PathSeq};
