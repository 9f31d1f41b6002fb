//! Exact combinatorial machinery for thrackle drawings.
//!
//! A graph is drawable as a thrackle iff some family of crossing orders
//! (one permutation of the vertex-disjoint edges per edge) yields a planar
//! gadget graph. This crate builds that reduction, searches it with
//! planarity pruning, and evaluates the edge-density bounds that exhaustive
//! dumbbell searches certify. It also generates and audits "chessboard"
//! plane graphs that are extremal for the related Turán-type problem.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, parallel
//! drivers and the command-line tool live in the `thrackle` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod construction;
pub mod cycles;
pub mod doubling;
pub mod dumbbell;
pub mod embedding;
pub mod gadget;
pub mod graph;
pub mod planarity;
pub mod schedule;
pub mod search;
pub mod witness;

mod lr;

pub use graph::{Edge, EdgeId, Graph, VertexId};

use alloc::string::String;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0} (edge {0}-{1})")]
    InvalidEdge(VertexId, VertexId),
    #[error("duplicate edge {0}-{1} in a simple graph")]
    DuplicateEdge(VertexId, VertexId),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("graph is not connected")]
    NotConnected,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ScheduleError {
    #[error("edge {0} is scheduled to cross edge {1}, but they share a vertex")]
    AdjacentCrossing(EdgeId, EdgeId),
    #[error("edge {0} lists edge {1} but not vice versa")]
    InconsistentSchedule(EdgeId, EdgeId),
    #[error("edge {0} lists edge {1} more than once")]
    RepeatedCrossing(EdgeId, EdgeId),
    #[error("schedule refers to unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("schedule has {found} lists but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DoublingError {
    #[error("cycle has even length {0}")]
    NotOddCycle(usize),
    #[error("vertex sequence is not a simple cycle of the graph")]
    NotACycle,
    #[error("input witness does not validate")]
    InvalidWitness,
    #[error("doubling failed: {0}")]
    DoublingFailed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DumbbellError {
    #[error("DB({0},{1},{2}) is degenerate (would need loops or parallel edges)")]
    DegenerateDumbbell(i64, i64, i64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no c satisfies the closed-form condition for r = {0}: the denominator is not positive")]
    InfeasibleR(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no periodic growth pattern found for l = {0}")]
    PatternNotFound(usize),
    #[error("faces do not form a plane embedding")]
    InvalidEmbedding,
}
