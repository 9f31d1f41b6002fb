//! Crossing schedules: for each edge, the edges it crosses in order along
//! its orientation.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeId, Graph};
use crate::ScheduleError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CrossingSchedule {
    lists: Vec<Vec<EdgeId>>,
}

impl CrossingSchedule {
    /// Empty schedule for a graph with `m` edges.
    pub fn empty(m: usize) -> Self {
        CrossingSchedule {
            lists: vec![Vec::new(); m],
        }
    }

    pub fn from_lists(lists: Vec<Vec<EdgeId>>) -> Self {
        CrossingSchedule { lists }
    }

    pub fn lists(&self) -> &[Vec<EdgeId>] {
        &self.lists
    }

    pub fn into_lists(self) -> Vec<Vec<EdgeId>> {
        self.lists
    }

    pub fn edge_count(&self) -> usize {
        self.lists.len()
    }

    /// `π_e`.
    pub fn pi(&self, e: EdgeId) -> &[EdgeId] {
        &self.lists[e]
    }

    pub fn pi_mut(&mut self, e: EdgeId) -> &mut Vec<EdgeId> {
        &mut self.lists[e]
    }

    /// Number of scheduled crossings, counting each unordered pair once.
    pub fn crossing_count(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Reverses the π list of `e`, matching a reversal of its orientation.
    pub fn reverse_edge(&mut self, e: EdgeId) {
        self.lists[e].reverse();
    }

    /// Every violated schedule condition, in a fixed order. Partial
    /// schedules are allowed.
    pub fn violations(&self, g: &Graph) -> Vec<ScheduleError> {
        let m = g.edge_count();
        let mut out = Vec::new();
        if self.lists.len() != m {
            out.push(ScheduleError::LengthMismatch {
                expected: m,
                found: self.lists.len(),
            });
        }
        let mut mark = vec![usize::MAX; m];
        for (e, list) in self.lists.iter().enumerate() {
            if e >= m {
                break;
            }
            let ed = g.edge(e);
            for &f in list {
                if f >= m {
                    out.push(ScheduleError::UnknownEdge(f));
                    continue;
                }
                if mark[f] == e {
                    out.push(ScheduleError::RepeatedCrossing(e, f));
                    continue;
                }
                mark[f] = e;
                if f == e || ed.shares_vertex(&g.edge(f)) {
                    out.push(ScheduleError::AdjacentCrossing(e, f));
                } else if f < self.lists.len() && !self.lists[f].contains(&e) {
                    out.push(ScheduleError::InconsistentSchedule(e, f));
                }
            }
        }
        out
    }

    /// First violated condition, if any.
    pub fn check(&self, g: &Graph) -> Result<(), ScheduleError> {
        match self.violations(g).into_iter().next() {
            Some(err) => Err(err),
            None => Ok(()),
        }
    }

    /// `π_e` is a permutation of all edges disjoint from `e`. Assumes the
    /// schedule passed [`CrossingSchedule::check`].
    pub fn is_edge_complete(&self, g: &Graph, e: EdgeId) -> bool {
        let ed = g.edge(e);
        let me = g.edges().iter().filter(|f| !f.shares_vertex(&ed)).count();
        self.lists[e].len() == me
    }

    pub fn is_complete(&self, g: &Graph) -> bool {
        self.lists.len() == g.edge_count()
            && self.check(g).is_ok()
            && (0..g.edge_count()).all(|e| self.is_edge_complete(g, e))
    }
}
