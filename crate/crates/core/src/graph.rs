//! Undirected multigraphs with dense, stable vertex and edge ids.
//!
//! Every edge carries an orientation (`tail -> head`). Most queries ignore
//! it; crossing schedules are read along it.

use alloc::vec;
use alloc::vec::Vec;

use crate::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Edge { tail, head }
    }

    /// The endpoint opposite to `v`. `v` must be an endpoint.
    #[inline]
    pub fn other(&self, v: VertexId) -> VertexId {
        if v == self.tail {
            self.head
        } else {
            self.tail
        }
    }

    #[inline]
    pub fn touches(&self, v: VertexId) -> bool {
        self.tail == v || self.head == v
    }

    #[inline]
    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.tail) || self.touches(other.head)
    }

    pub fn reversed(&self) -> Edge {
        Edge::new(self.head, self.tail)
    }

    fn key(&self) -> (VertexId, VertexId) {
        if self.tail < self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<Edge>,
    adjacency: Vec<Vec<EdgeId>>,
    multigraph: bool,
}

impl Graph {
    /// A simple graph on `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            multigraph: false,
        }
    }

    /// A graph on `n` vertices that accepts parallel edges.
    pub fn new_multigraph(n: usize) -> Self {
        Graph {
            multigraph: true,
            ..Graph::new(n)
        }
    }

    /// Builds a simple graph whose vertex set is `0..=max endpoint`.
    pub fn from_edges(pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::with_edges(n, pairs)
    }

    /// Builds a simple graph on exactly `n` vertices.
    pub fn with_edges(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn multigraph_with_edges(
        n: usize,
        pairs: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new_multigraph(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    /// Adds the edge `tail -> head` and returns its id (ids are assigned in
    /// insertion order).
    pub fn add_edge(&mut self, tail: VertexId, head: VertexId) -> Result<EdgeId, GraphError> {
        if tail == head {
            return Err(GraphError::InvalidEdge(tail, head));
        }
        let n = self.vertex_count();
        if tail >= n || head >= n {
            return Err(GraphError::UnknownVertex(tail.max(head)));
        }
        if !self.multigraph && self.find_edge(tail, head).is_some() {
            return Err(GraphError::DuplicateEdge(tail, head));
        }
        let id = self.edges.len();
        self.edges.push(Edge::new(tail, head));
        self.adjacency[tail].push(id);
        self.adjacency[head].push(id);
        Ok(id)
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    pub fn try_edge(&self, e: EdgeId) -> Result<Edge, GraphError> {
        self.edges.get(e).copied().ok_or(GraphError::UnknownEdge(e))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edge ids incident to `v`, in insertion order.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().map(move |&e| self.edges[e].other(v))
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.adjacency[a]
            .iter()
            .copied()
            .find(|&e| self.edges[e].other(a) == b)
    }

    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.edges.iter().map(|e| (e.tail, e.head)).collect()
    }

    /// Flips the orientation of `e`.
    pub fn reverse_edge(&mut self, e: EdgeId) {
        self.edges[e] = self.edges[e].reversed();
    }

    /// Sets the orientation of `e` so that it leaves `tail`.
    pub fn orient_from(&mut self, e: EdgeId, tail: VertexId) {
        if self.edges[e].tail != tail {
            debug_assert_eq!(self.edges[e].head, tail);
            self.reverse_edge(e);
        }
    }

    /// Edges that share no vertex with `e` (the set `E_e`), in id order.
    pub fn disjoint_edges(&self, e: EdgeId) -> Result<Vec<EdgeId>, GraphError> {
        let base = self.try_edge(e)?;
        Ok((0..self.edge_count())
            .filter(|&f| f != e && !self.edges[f].shares_vertex(&base))
            .collect())
    }

    /// Edges that share at least one vertex with `e`, excluding `e` itself.
    pub fn adjacent_edges(&self, e: EdgeId) -> Result<Vec<EdgeId>, GraphError> {
        let base = self.try_edge(e)?;
        Ok((0..self.edge_count())
            .filter(|&f| f != e && self.edges[f].shares_vertex(&base))
            .collect())
    }

    /// Number of vertex-disjoint unordered edge pairs.
    pub fn disjoint_pair_count(&self) -> usize {
        let m = self.edge_count();
        let mut count = 0;
        for a in 0..m {
            for b in a + 1..m {
                if !self.edges[a].shares_vertex(&self.edges[b]) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Connected components as a per-vertex component index, plus the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Removes degree-one vertices repeatedly. Returns the surviving edge ids.
    pub fn two_core_edges(&self) -> Vec<EdgeId> {
        let n = self.vertex_count();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; self.edge_count()];
        let mut queue: Vec<VertexId> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = queue.pop() {
            if deg[v] != 1 {
                continue;
            }
            for &e in self.incident(v) {
                if alive[e] {
                    alive[e] = false;
                    deg[v] -= 1;
                    let w = self.edges[e].other(v);
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        queue.push(w);
                    }
                }
            }
        }
        (0..self.edge_count()).filter(|&e| alive[e]).collect()
    }

    /// The subgraph on the same vertex set keeping only `keep` (renumbered
    /// densely in the given order).
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Graph {
        let mut g = Graph {
            edges: Vec::with_capacity(keep.len()),
            adjacency: vec![Vec::new(); self.vertex_count()],
            multigraph: self.multigraph,
        };
        for &e in keep {
            let ed = self.edges[e];
            let id = g.edges.len();
            g.edges.push(ed);
            g.adjacency[ed.tail].push(id);
            g.adjacency[ed.head].push(id);
        }
        g
    }

    /// Unordered endpoint key `(min, max)` of every edge.
    pub(crate) fn simple_keys(&self) -> Vec<(VertexId, VertexId)> {
        self.edges.iter().map(Edge::key).collect()
    }

    /// Replaces every edge by a path of `k` edges. Original vertices keep their
    /// ids; edge `e` becomes edges `k*e .. k*e+k` in order from tail to head.
    pub fn subdivide(&self, k: usize) -> Graph {
        assert!(k >= 1);
        let n = self.vertex_count();
        let mut g = Graph::new(n + self.edge_count() * (k - 1));
        g.multigraph = self.multigraph;
        let mut next = n;
        for e in &self.edges {
            let mut prev = e.tail;
            for i in 0..k {
                let cur = if i + 1 == k {
                    e.head
                } else {
                    next += 1;
                    next - 1
                };
                g.add_edge(prev, cur).expect("fresh subdivision edge");
                prev = cur;
            }
        }
        g
    }
}
