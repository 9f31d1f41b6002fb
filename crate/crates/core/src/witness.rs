//! Thrackle witnesses: a graph, a complete crossing schedule and a plane
//! embedding of the resulting gadget graph.

use alloc::vec::Vec;
use core::fmt;

use crate::embedding::PlanarEmbedding;
use crate::gadget::{build_gadget_graph, GadgetGraph};
use crate::graph::{EdgeId, Graph};
use crate::planarity;
use crate::schedule::CrossingSchedule;
use crate::ScheduleError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThrackleWitness {
    pub graph: Graph,
    pub schedule: CrossingSchedule,
    /// Plane embedding of the gadget graph, when known.
    pub embedding: Option<PlanarEmbedding>,
}

impl ThrackleWitness {
    pub fn new(graph: Graph, schedule: CrossingSchedule, embedding: Option<PlanarEmbedding>) -> Self {
        ThrackleWitness {
            graph,
            schedule,
            embedding,
        }
    }

    /// Builds the gadget graph and embeds it; `None` if it is not planar.
    pub fn embedded(graph: Graph, schedule: CrossingSchedule) -> Result<Option<Self>, ScheduleError> {
        let gadget = build_gadget_graph(&graph, &schedule)?;
        Ok(planarity::embed(&gadget.graph).embedding.map(|emb| ThrackleWitness {
            graph,
            schedule,
            embedding: Some(emb),
        }))
    }

    pub fn gadget(&self) -> Result<GadgetGraph, ScheduleError> {
        build_gadget_graph(&self.graph, &self.schedule)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessFailure {
    Schedule(ScheduleError),
    /// `π_e` misses some edge disjoint from `e`.
    Incomplete(EdgeId),
    NonPlanarGadget,
    /// The stored embedding is not an embedding of the gadget graph.
    EmbeddingMismatch,
    /// The stored rotation system is not plane.
    InvalidEmbedding,
}

impl fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessFailure::Schedule(e) => write!(f, "schedule: {e}"),
            WitnessFailure::Incomplete(e) => write!(f, "incomplete: edge {e} misses a disjoint edge"),
            WitnessFailure::NonPlanarGadget => write!(f, "gadget graph is not planar"),
            WitnessFailure::EmbeddingMismatch => write!(f, "embedding does not match the gadget graph"),
            WitnessFailure::InvalidEmbedding => write!(f, "embedding is not a plane embedding"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<WitnessFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks completeness, reciprocity and planarity of the gadget graph, and
/// the stored embedding if present. Lists every failure found.
pub fn validate_witness(w: &ThrackleWitness) -> ValidationReport {
    let g = &w.graph;
    let mut failures: Vec<WitnessFailure> = w
        .schedule
        .violations(g)
        .into_iter()
        .map(WitnessFailure::Schedule)
        .collect();
    if !failures.is_empty() {
        return ValidationReport { failures };
    }
    for e in 0..g.edge_count() {
        if !w.schedule.is_edge_complete(g, e) {
            failures.push(WitnessFailure::Incomplete(e));
        }
    }
    let gadget = build_gadget_graph(g, &w.schedule).expect("schedule already checked");
    if !planarity::is_planar(&gadget.graph) {
        failures.push(WitnessFailure::NonPlanarGadget);
    }
    if let Some(emb) = &w.embedding {
        if !emb.embeds(&gadget.graph) {
            failures.push(WitnessFailure::EmbeddingMismatch);
        } else if !emb.is_valid() {
            failures.push(WitnessFailure::InvalidEmbedding);
        }
    }
    ValidationReport { failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(&pairs).unwrap()
    }

    #[test]
    fn c4_forced_schedule_fails_planarity() {
        let s = CrossingSchedule::from_lists(vec![vec![2], vec![3], vec![0], vec![1]]);
        let w = ThrackleWitness::new(cycle(4), s, None);
        assert_eq!(validate_witness(&w).failures, [WitnessFailure::NonPlanarGadget]);
    }

    #[test]
    fn reciprocity_failure_is_reported() {
        let s = CrossingSchedule::from_lists(vec![vec![2], vec![3], vec![], vec![1]]);
        let w = ThrackleWitness::new(cycle(4), s, None);
        let r = validate_witness(&w);
        assert!(!r.passed());
        assert!(r.failures.contains(&WitnessFailure::Schedule(ScheduleError::InconsistentSchedule(0, 2))));
    }

    #[test]
    fn triangle_is_a_witness() {
        let w = ThrackleWitness::embedded(cycle(3), CrossingSchedule::empty(3)).unwrap().unwrap();
        assert!(validate_witness(&w).passed());
    }

    #[test]
    fn incomplete_schedule_fails() {
        let w = ThrackleWitness::new(cycle(5), CrossingSchedule::empty(5), None);
        let r = validate_witness(&w);
        assert_eq!(r.failures.len(), 5);
    }

    #[test]
    fn wrong_embedding_is_reported() {
        let other = planarity::embed(&cycle(4)).embedding;
        let w = ThrackleWitness::new(cycle(3), CrossingSchedule::empty(3), other);
        assert_eq!(validate_witness(&w).failures, [WitnessFailure::EmbeddingMismatch]);
    }
}
