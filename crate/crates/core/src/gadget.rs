//! The gadget graph G′ of a (possibly partial) crossing schedule.
//!
//! Every scheduled crossing becomes a vertex on both edge paths, every
//! segment between two crossings gets a subdivision vertex, and each
//! crossing vertex is framed by a 4-cycle through its path neighbours in the
//! order (e-before, f-before, e-after, f-after) with `e < f`. A plane
//! embedding of G′ then forces the two paths to cross properly there.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, EdgeId, Graph, VertexId};
use crate::schedule::CrossingSchedule;
use crate::ScheduleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetVertex {
    Original(VertexId),
    /// Crossing of two edges, smaller id first.
    Crossing(EdgeId, EdgeId),
    /// Middle vertex of a segment of the given edge between two crossings.
    Subdivision(EdgeId),
    /// Loose end of a truncated edge.
    Stub(EdgeId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetEdge {
    /// Piece of the path of an original edge.
    Segment(EdgeId),
    /// Edge of the 4-cycle around the given crossing vertex.
    Frame(VertexId),
}

/// How an original edge takes part in a partial gadget graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeMode {
    /// Left out; crossings with it are ignored.
    Absent,
    /// Drawn from tail to head.
    Full,
    /// Drawn from its tail through its scheduled crossings, then stopped at
    /// a stub vertex short of its head.
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub vertex_kinds: Vec<GadgetVertex>,
    pub edge_kinds: Vec<GadgetEdge>,
    /// Gadget vertices along each original edge, tail first (empty for
    /// absent edges).
    pub paths: Vec<Vec<VertexId>>,
    /// Number of crossing vertices (X).
    pub crossings: usize,
    /// Number of subdivision vertices (S).
    pub subdivisions: usize,
}

impl GadgetGraph {
    /// Gadget vertex of the crossing between `e` and `f`, if scheduled.
    pub fn crossing_vertex(&self, e: EdgeId, f: EdgeId) -> Option<VertexId> {
        let key = GadgetVertex::Crossing(e.min(f), e.max(f));
        self.vertex_kinds.iter().position(|k| *k == key)
    }
}

/// Builds G′ for a schedule in which every edge is drawn in full.
pub fn build_gadget_graph(g: &Graph, s: &CrossingSchedule) -> Result<GadgetGraph, ScheduleError> {
    let modes = vec![EdgeMode::Full; g.edge_count()];
    build_partial_gadget(g, s, &modes)
}

/// Builds G′ with per-edge participation modes.
pub fn build_partial_gadget(
    g: &Graph,
    s: &CrossingSchedule,
    modes: &[EdgeMode],
) -> Result<GadgetGraph, ScheduleError> {
    s.check(g)?;
    let mut b = GadgetBuilder::new(g.vertex_count(), g.edge_count());
    b.run(g.edges(), s.lists(), modes, true);
    let n = b.vertex_count;
    let mut graph = Graph::new_multigraph(n);
    for &(u, v) in &b.pairs {
        graph.add_edge(u, v).expect("gadget edges are loop-free");
    }
    Ok(GadgetGraph {
        graph,
        vertex_kinds: b.vertex_kinds,
        edge_kinds: b.edge_kinds,
        paths: b.paths,
        crossings: b.crossings,
        subdivisions: b.subdivisions,
    })
}

/// Reusable scratch space for building gadget graphs in a tight loop.
#[derive(Clone, Debug)]
pub(crate) struct GadgetBuilder {
    n: usize,
    m: usize,
    cross_id: Vec<usize>,
    pub(crate) pairs: Vec<(VertexId, VertexId)>,
    pub(crate) vertex_count: usize,
    pub(crate) crossings: usize,
    pub(crate) subdivisions: usize,
    paths: Vec<Vec<VertexId>>,
    frames: Vec<(VertexId, [VertexId; 4])>,
    vertex_kinds: Vec<GadgetVertex>,
    edge_kinds: Vec<GadgetEdge>,
}

const NONE: usize = usize::MAX;

impl GadgetBuilder {
    pub(crate) fn new(n: usize, m: usize) -> Self {
        GadgetBuilder {
            n,
            m,
            cross_id: vec![NONE; m * m],
            pairs: Vec::new(),
            vertex_count: 0,
            crossings: 0,
            subdivisions: 0,
            paths: vec![Vec::new(); m],
            frames: Vec::new(),
            vertex_kinds: Vec::new(),
            edge_kinds: Vec::new(),
        }
    }

    /// Fills `pairs` and `vertex_count`. The schedule must already satisfy
    /// the reciprocity and disjointness conditions.
    pub(crate) fn run(&mut self, edges: &[Edge], lists: &[Vec<EdgeId>], modes: &[EdgeMode], meta: bool) {
        let m = self.m;
        self.pairs.clear();
        self.frames.clear();
        self.vertex_kinds.clear();
        self.edge_kinds.clear();
        for x in self.cross_id.iter_mut() {
            *x = NONE;
        }
        let mut next = self.n;
        if meta {
            self.vertex_kinds.extend((0..self.n).map(GadgetVertex::Original));
        }
        for e in 0..m {
            if modes[e] == EdgeMode::Absent {
                continue;
            }
            for &f in &lists[e] {
                if f > e && modes[f] != EdgeMode::Absent {
                    self.cross_id[e * m + f] = next;
                    self.cross_id[f * m + e] = next;
                    if meta {
                        self.vertex_kinds.push(GadgetVertex::Crossing(e, f));
                    }
                    next += 1;
                }
            }
        }
        self.crossings = next - self.n;
        self.subdivisions = 0;
        for e in 0..m {
            let path = &mut self.paths[e];
            path.clear();
            if modes[e] == EdgeMode::Absent {
                continue;
            }
            path.push(edges[e].tail);
            let mut prev_crossing = false;
            for &f in &lists[e] {
                let x = self.cross_id[e * m + f];
                if x == NONE {
                    continue;
                }
                if prev_crossing {
                    path.push(next);
                    if meta {
                        self.vertex_kinds.push(GadgetVertex::Subdivision(e));
                    }
                    next += 1;
                    self.subdivisions += 1;
                }
                path.push(x);
                prev_crossing = true;
            }
            if modes[e] == EdgeMode::Open {
                path.push(next);
                if meta {
                    self.vertex_kinds.push(GadgetVertex::Stub(e));
                }
                next += 1;
            } else {
                path.push(edges[e].head);
            }
            for w in path.windows(2) {
                self.pairs.push((w[0], w[1]));
                if meta {
                    self.edge_kinds.push(GadgetEdge::Segment(e));
                }
            }
        }
        self.vertex_count = next;
        // Frames, in crossing-vertex order.
        for e in 0..m {
            if modes[e] == EdgeMode::Absent {
                continue;
            }
            for i in 1..self.paths[e].len().saturating_sub(1) {
                let x = self.paths[e][i];
                if x < self.n || x >= self.n + self.crossings {
                    continue;
                }
                let (eb, ea) = (self.paths[e][i - 1], self.paths[e][i + 1]);
                // Locate the partner edge f > e.
                let f = match (e + 1..m).find(|&f| self.cross_id[e * m + f] == x) {
                    Some(f) => f,
                    None => continue,
                };
                let pf = &self.paths[f];
                let j = pf.iter().position(|&y| y == x).expect("crossing lies on both paths");
                self.frames.push((x, [eb, pf[j - 1], ea, pf[j + 1]]));
            }
        }
        self.frames.sort_unstable_by_key(|fr| fr.0);
        for &(x, [a, b, c, d]) in &self.frames {
            self.pairs.extend_from_slice(&[(a, b), (b, c), (c, d), (d, a)]);
            if meta {
                self.edge_kinds.extend([GadgetEdge::Frame(x); 4]);
            }
        }
    }
}
