//! Structural queries: girth and short cycles, bipartiteness, blocks and
//! cut vertices, Euler walks.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::GraphError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleReport {
    /// Length of a shortest cycle; `None` for forests.
    pub girth: Option<usize>,
    /// A shortest odd cycle as a vertex sequence (closing edge implied).
    pub shortest_odd_cycle: Option<Vec<VertexId>>,
    /// Smallest cycle length strictly greater than the girth.
    pub second_smallest_cycle_length: Option<usize>,
}

/// Girth, a shortest odd cycle and the second smallest cycle length.
///
/// Girth and odd cycle come from one BFS per vertex. The second smallest
/// length is found by testing each candidate length with a bounded simple
/// path search inside blocks, so it is only meant for desk-scale graphs or
/// graphs whose second cycle length is small.
pub fn cycle_report(g: &Graph) -> CycleReport {
    let girth = girth(g);
    let shortest_odd_cycle = shortest_odd_cycle(g);
    let second_smallest_cycle_length = girth.and_then(|gth| {
        let limit = g.vertex_count();
        (gth + 1..=limit).find(|&len| has_cycle_of_length(g, len))
    });
    CycleReport {
        girth,
        shortest_odd_cycle,
        second_smallest_cycle_length,
    }
}

/// Exact girth by BFS from every vertex. Parallel edges count as 2-cycles.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[v] + 1 >= b {
                    break;
                }
            }
            for &e in g.incident(v) {
                if e == via[v] && dist[v] > 0 {
                    continue;
                }
                let w = g.edge(e).other(v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    let len = dist[v] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// A shortest odd cycle, or `None` if the graph is bipartite.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut best: Option<(usize, VertexId, VertexId, VertexId)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                } else if dist[w] == dist[v] {
                    let len = 2 * dist[v] + 1;
                    if best.is_none_or(|b| len < b.0) {
                        best = Some((len, root, v, w));
                    }
                }
            }
        }
    }
    let (_, root, a, b) = best?;
    // Rebuild from the minimising root: the two BFS paths only meet at the root.
    let parent = bfs_parents(g, root);
    let mut left = vec![a];
    let mut x = a;
    while x != root {
        x = parent[x];
        left.push(x);
    }
    let mut right = vec![b];
    let mut y = b;
    while y != root {
        y = parent[y];
        right.push(y);
    }
    // left: a .. root, right: b .. root. Cycle: root .. a, b .. (before root).
    left.reverse();
    right.pop();
    left.extend(right);
    debug_assert!(is_simple_cycle(g, &left));
    Some(left)
}

fn bfs_parents(g: &Graph, root: VertexId) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    parent
}

/// True iff `cycle` lists distinct vertices, consecutive ones (cyclically)
/// adjacent, with at least three vertices.
pub fn is_simple_cycle(g: &Graph, cycle: &[VertexId]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in cycle {
        if v >= g.vertex_count() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..k).all(|i| g.find_edge(cycle[i], cycle[(i + 1) % k]).is_some())
}

/// Edge ids along a simple cycle given as a vertex sequence.
pub fn cycle_edges(g: &Graph, cycle: &[VertexId]) -> Option<Vec<EdgeId>> {
    let k = cycle.len();
    (0..k)
        .map(|i| g.find_edge(cycle[i], cycle[(i + 1) % k]))
        .collect()
}

/// Does the graph contain a simple cycle with exactly `len` edges?
pub fn has_cycle_of_length(g: &Graph, len: usize) -> bool {
    if len < 3 {
        return len == 2 && has_parallel_edges(g);
    }
    let blocks = block_decomposition(g);
    blocks.blocks.iter().any(|b| {
        b.len() >= len && {
            let sub = g.edge_subgraph(b);
            block_has_cycle_of_length(&sub, len)
        }
    })
}

fn has_parallel_edges(g: &Graph) -> bool {
    let mut keys = g.simple_keys();
    keys.sort_unstable();
    keys.windows(2).any(|w| w[0] == w[1])
}

fn block_has_cycle_of_length(g: &Graph, len: usize) -> bool {
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    // Every cycle is found from its smallest vertex.
    for s in 0..n {
        if g.degree(s) < 2 {
            continue;
        }
        // Distances to `s` through vertices above `s`, for pruning.
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if w > s && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        on_path[s] = true;
        if extend_path(g, s, s, 0, len, &dist, &mut on_path) {
            return true;
        }
        on_path[s] = false;
    }
    false
}

fn extend_path(
    g: &Graph,
    start: VertexId,
    v: VertexId,
    depth: usize,
    len: usize,
    dist: &[usize],
    on_path: &mut [bool],
) -> bool {
    for w in g.neighbors(v) {
        if w == start && depth + 1 == len && depth >= 2 {
            return true;
        }
        if w <= start || on_path[w] || dist[w].saturating_add(depth + 1) > len {
            continue;
        }
        on_path[w] = true;
        if extend_path(g, start, w, depth + 1, len, dist, on_path) {
            on_path[w] = false;
            return true;
        }
        on_path[w] = false;
    }
    false
}

/// All simple cycles of length at most `max_len`, each as an edge-id list
/// starting from its smallest vertex. Each cycle is reported once.
pub fn cycles_up_to(g: &Graph, max_len: usize) -> Vec<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path: Vec<EdgeId> = Vec::new();
    for s in 0..n {
        on_path[s] = true;
        collect_cycles(g, s, s, max_len, &mut on_path, &mut path, &mut out);
        on_path[s] = false;
    }
    out
}

fn collect_cycles(
    g: &Graph,
    start: VertexId,
    v: VertexId,
    max_len: usize,
    on_path: &mut [bool],
    path: &mut Vec<EdgeId>,
    out: &mut Vec<Vec<EdgeId>>,
) {
    for &e in g.incident(v) {
        if path.last() == Some(&e) {
            continue;
        }
        let w = g.edge(e).other(v);
        if w == start {
            // Report each cycle in one direction only.
            if path.len() >= 2 && path[0] < e {
                let mut c = path.clone();
                c.push(e);
                out.push(c);
            } else if path.len() == 1 && path[0] < e {
                out.push(vec![path[0], e]);
            }
            continue;
        }
        if w < start || on_path[w] || path.len() + 1 >= max_len {
            continue;
        }
        on_path[w] = true;
        path.push(e);
        collect_cycles(g, start, w, max_len, on_path, path, out);
        path.pop();
        on_path[w] = false;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// Colour (0 or 1) per vertex.
    Coloring(Vec<u8>),
    /// An odd cycle as a vertex sequence.
    OddCycle(Vec<VertexId>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

/// Two-colouring by BFS, or an odd cycle witnessing that none exists.
pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        parent[s] = s;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return Bipartition::OddCycle(odd_cycle_from_conflict(&parent, &depth, v, w));
                }
            }
        }
    }
    Bipartition::Coloring(color)
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_bipartite()
}

fn odd_cycle_from_conflict(
    parent: &[VertexId],
    depth: &[usize],
    mut a: VertexId,
    mut b: VertexId,
) -> Vec<VertexId> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    right.reverse();
    left.extend(right);
    left
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge sets of the blocks (2-connected components and bridges).
    pub blocks: Vec<Vec<EdgeId>>,
    /// Cut vertices in increasing order.
    pub cut_vertices: Vec<VertexId>,
}

/// Blocks and cut vertices (Hopcroft–Tarjan with an edge stack).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut time = 0;
    // Iterative DFS frames: (vertex, parent edge, next incident index, child count).
    let mut frames: Vec<(VertexId, usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push((root, usize::MAX, 0, 0));
        while let Some(&mut (v, pe, ref mut idx, _)) = frames.last_mut() {
            if *idx < g.degree(v) {
                let e = g.incident(v)[*idx];
                *idx += 1;
                if e == pe {
                    continue;
                }
                let w = g.edge(e).other(v);
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.last_mut().unwrap().3 += 1;
                    frames.push((w, e, 0, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let (v, pe, _, _) = frames.pop().unwrap();
                if let Some(&(u, _, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    // Cut vertices are exactly the vertices lying in more than one block.
    let mut block_count = vec![0usize; n];
    for b in &blocks {
        let mut verts: Vec<VertexId> = b
            .iter()
            .flat_map(|&e| [g.edge(e).tail, g.edge(e).head])
            .collect();
        verts.sort_unstable();
        verts.dedup();
        for v in verts {
            block_count[v] += 1;
        }
    }
    let cut_vertices = (0..n)
        .filter(|&v| block_count[v] > 1)
        .collect();
    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

/// A walk using every edge exactly once, as edge ids with the vertex it
/// starts from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerWalk {
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
}

impl EulerWalk {
    /// Vertex sequence visited by the walk (length `edges.len() + 1`).
    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        let mut out = vec![self.start];
        let mut v = self.start;
        for &e in &self.edges {
            v = g.edge(e).other(v);
            out.push(v);
        }
        out
    }

    pub fn is_closed(&self, g: &Graph) -> bool {
        self.vertices(g).last() == Some(&self.start)
    }
}

/// Euler walk by Hierholzer's method, starting at the smallest odd-degree
/// vertex (or the smallest non-isolated vertex). `Ok(None)` when more than two
/// vertices have odd degree.
pub fn euler_walk(g: &Graph) -> Result<Option<EulerWalk>, GraphError> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Ok(Some(EulerWalk {
            start: 0,
            edges: Vec::new(),
        }));
    }
    let (comp, _) = g.components();
    let mut edge_comps = g.edges().iter().map(|e| comp[e.tail]);
    let c0 = edge_comps.next().unwrap();
    if edge_comps.any(|c| c != c0) || (0..n).any(|v| g.degree(v) == 0) {
        return Err(GraphError::NotConnected);
    }
    let odd: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) % 2 == 1).collect();
    if odd.len() > 2 {
        return Ok(None);
    }
    let start = odd
        .first()
        .copied()
        .unwrap_or_else(|| (0..n).find(|&v| g.degree(v) > 0).unwrap());
    let mut used = vec![false; g.edge_count()];
    let mut next_idx = vec![0usize; n];
    let mut stack: Vec<(VertexId, EdgeId)> = vec![(start, usize::MAX)];
    let mut walk: Vec<EdgeId> = Vec::new();
    while let Some(&(v, _)) = stack.last() {
        let inc = g.incident(v);
        while next_idx[v] < inc.len() && used[inc[next_idx[v]]] {
            next_idx[v] += 1;
        }
        if next_idx[v] < inc.len() {
            let e = inc[next_idx[v]];
            used[e] = true;
            stack.push((g.edge(e).other(v), e));
        } else {
            let (_, e) = stack.pop().unwrap();
            if e != usize::MAX {
                walk.push(e);
            }
        }
    }
    walk.reverse();
    Ok(Some(EulerWalk { start, edges: walk }))
}

/// An edge order in which every edge after the first touches a vertex
/// already reached by earlier edges (DFS over edges, smallest ids first).
pub fn connected_edge_order(g: &Graph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut reached = vec![false; n];
    let mut used = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut stack: Vec<VertexId> = Vec::new();
    for s in 0..n {
        if reached[s] || g.degree(s) == 0 {
            continue;
        }
        reached[s] = true;
        stack.push(s);
        while let Some(&v) = stack.last() {
            if let Some(&e) = g.incident(v).iter().find(|&&e| !used[e]) {
                used[e] = true;
                order.push(e);
                let w = g.edge(e).other(v);
                if !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            } else {
                stack.pop();
            }
        }
    }
    order
}
