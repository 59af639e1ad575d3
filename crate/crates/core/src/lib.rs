//! Graceful and additively graceful labelings of signed graphs.
//!
//! The crate is organised around a small data model ([`graph`]), exact
//! verifiers for the four labeling notions ([`verify`]), closed-form
//! generators for the known labeled families ([`constructions`]),
//! non-divisible sum graphs and cograph tests ([`ndsg`]), and a
//! deterministic backtracking solver with an unpruned brute-force oracle
//! ([`search`]).

pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod ndsg;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, GraphDocument, Sign, SignedGraph, Stats, VertexLabeling};
pub use verify::{LabelingMode, VerificationReport};
