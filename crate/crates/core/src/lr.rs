//! Left-right planarity test (de Fraysseix / Rosenstiehl, in Brandes'
//! formulation) on simple graphs given as dense edge lists.
//!
//! `embed` returns, per vertex, the incident edge indices in
//! counter-clockwise order. Faces are traced by taking, at the vertex just
//! entered, the successor of the arrival edge.

use alloc::vec;
use alloc::vec::Vec;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    #[inline]
    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    #[inline]
    fn swap(&mut self) {
        core::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    adj: &'a [Vec<(usize, usize)>],
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<isize>,
    ordered_adjs: Vec<Vec<usize>>,
    reference: Vec<usize>,
    side: Vec<i8>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<Option<ConflictPair>>,
    lowpt_edge: Vec<usize>,
    roots: Vec<usize>,
}

/// Adjacency lists `(neighbor, edge index)` for a simple edge list.
pub(crate) fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); n];
    for (k, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, k));
        adj[v].push((u, k));
    }
    adj
}

impl<'a> LrState<'a> {
    fn new(n: usize, m: usize, adj: &'a [Vec<(usize, usize)>]) -> Self {
        LrState {
            adj,
            tail: vec![NONE; m],
            head: vec![NONE; m],
            oriented: vec![false; m],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            ordered_adjs: vec![Vec::new(); n],
            reference: vec![NONE; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![None; m],
            lowpt_edge: vec![NONE; m],
            roots: Vec::new(),
        }
    }

    fn run_test(&mut self) -> bool {
        let n = self.height.len();
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.dfs_orientation(v);
            }
        }
        for v in 0..n {
            let nd = &self.nesting_depth;
            self.ordered_adjs[v].sort_by_key(|&e| nd[e]);
        }
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            if !self.dfs_testing(r) {
                return false;
            }
        }
        true
    }

    fn dfs_orientation(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for i in 0..self.adj[v].len() {
            let (w, vw) = self.adj[v][i];
            if self.oriented[vw] {
                continue;
            }
            self.oriented[vw] = true;
            self.tail[vw] = v;
            self.head[vw] = w;
            self.ordered_adjs[v].push(vw);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.dfs_orientation(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw] as isize;
            if self.lowpt2[vw] < self.height[v] {
                self.nesting_depth[vw] += 1;
            }
            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    #[inline]
    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    #[inline]
    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn dfs_testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        for i in 0..self.ordered_adjs[v].len() {
            let ei = self.ordered_adjs[v][i];
            let w = self.head[ei];
            self.stack_bottom[ei] = self.stack.last().copied();
            if ei == self.parent_edge[w] {
                if !self.dfs_testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::EMPTY,
                    right: Interval { low: ei, high: ei },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.last().copied() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.reference[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                    self.reference[e] = hl;
                } else {
                    self.reference[e] = hr;
                }
            }
        }
    }

    fn sign(&mut self, e: usize) -> i8 {
        let mut chain = Vec::new();
        let mut cur = e;
        while self.reference[cur] != NONE {
            chain.push(cur);
            cur = self.reference[cur];
        }
        let mut s = self.side[cur];
        for &x in chain.iter().rev() {
            self.side[x] *= s;
            self.reference[x] = NONE;
            s = self.side[x];
        }
        self.side[e]
    }
}

/// Clockwise rotation kept as a circular doubly linked list over half-edges.
/// Half-edge `2k` sits at the tail of oriented edge `k`, `2k + 1` at its head.
struct Rotation {
    cw: Vec<usize>,
    ccw: Vec<usize>,
    first: Vec<usize>,
}

impl Rotation {
    fn add_cw(&mut self, v: usize, h: usize, reference: usize) {
        if reference == NONE {
            self.cw[h] = h;
            self.ccw[h] = h;
            self.first[v] = h;
        } else {
            let next = self.cw[reference];
            self.cw[reference] = h;
            self.ccw[h] = reference;
            self.cw[h] = next;
            self.ccw[next] = h;
        }
    }

    fn add_ccw(&mut self, v: usize, h: usize, reference: usize) {
        if reference == NONE {
            self.add_cw(v, h, NONE);
        } else {
            let before = self.ccw[reference];
            self.add_cw(v, h, before);
            if reference == self.first[v] {
                self.first[v] = h;
            }
        }
    }

    fn add_first(&mut self, v: usize, h: usize) {
        let r = self.first[v];
        self.add_ccw(v, h, r);
    }
}

/// Planarity of a simple graph. Edges must be loop-free and distinct.
pub(crate) fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    if n > 2 && edges.len() > 3 * n - 6 {
        return false;
    }
    let adj = adjacency(n, edges);
    LrState::new(n, edges.len(), &adj).run_test()
}

/// Counter-clockwise rotation per vertex (edge indices), or `None` if the
/// graph is not planar.
pub(crate) fn embed(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if n > 2 && edges.len() > 3 * n - 6 {
        return None;
    }
    let m = edges.len();
    let adj = adjacency(n, edges);
    let mut st = LrState::new(n, m, &adj);
    if !st.run_test() {
        return None;
    }
    for k in 0..m {
        let s = st.sign(k) as isize;
        st.nesting_depth[k] *= s;
    }
    let mut rot = Rotation {
        cw: vec![NONE; 2 * m],
        ccw: vec![NONE; 2 * m],
        first: vec![NONE; n],
    };
    let half = |st: &LrState, v: usize, k: usize| if st.tail[k] == v { 2 * k } else { 2 * k + 1 };
    for v in 0..n {
        let nd = &st.nesting_depth;
        st.ordered_adjs[v].sort_by_key(|&e| nd[e]);
        let mut prev = NONE;
        for &k in &st.ordered_adjs[v] {
            let h = 2 * k;
            rot.add_cw(v, h, prev);
            prev = h;
        }
    }
    let mut left_ref = vec![NONE; n];
    let mut right_ref = vec![NONE; n];
    // Iterative version of the recursive embedding pass.
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for ri in 0..st.roots.len() {
        frames.push((st.roots[ri], 0));
        while let Some(&mut (v, ref mut i)) = frames.last_mut() {
            if *i >= st.ordered_adjs[v].len() {
                frames.pop();
                continue;
            }
            let ei = st.ordered_adjs[v][*i];
            *i += 1;
            let w = st.head[ei];
            let hw = half(&st, w, ei);
            if ei == st.parent_edge[w] {
                rot.add_first(w, hw);
                left_ref[v] = half(&st, v, ei);
                right_ref[v] = half(&st, v, ei);
                frames.push((w, 0));
            } else if st.side[ei] == 1 {
                rot.add_cw(w, hw, right_ref[w]);
            } else {
                rot.add_ccw(w, hw, left_ref[w]);
                left_ref[w] = hw;
            }
        }
    }
    let mut out = vec![Vec::new(); n];
    for v in 0..n {
        let f = rot.first[v];
        if f == NONE {
            continue;
        }
        let mut h = f;
        loop {
            out[v].push(h / 2);
            h = rot.ccw[h];
            if h == f {
                break;
            }
        }
    }
    Some(out)
}
