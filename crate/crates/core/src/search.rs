//! Backtracking search for crossing schedules with planar gadget graphs.
//!
//! Edges are processed in Euler-walk order and oriented along the walk.
//! While edge `f` is current it repeatedly picks a not yet crossed partner
//! `e` among the earlier edges disjoint from it, inserts `f` anywhere into
//! `π_e` and appends `e` to `π_f`. Every complete schedule is reached by
//! exactly one path of choices.
//!
//! Pruning tests the partial gadget graph built from the finished edges plus
//! the current edge cut off just after its last crossing. That graph is a
//! minor of the gadget graph of every completion, so a non-planar partial
//! graph has no planar completion.

use alloc::vec;
use alloc::vec::Vec;

use crate::cycles::{connected_edge_order, cycles_up_to, euler_walk};
use crate::gadget::{EdgeMode, GadgetBuilder};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::planarity;
use crate::schedule::CrossingSchedule;
use crate::witness::ThrackleWitness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// Euler walk when one exists, otherwise the DFS order.
    #[default]
    EulerWalk,
    /// DFS edge order that always extends an already reached vertex.
    DfsFallback,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub edge_order: EdgeOrder,
    /// Planarity test after every extension. When off, only complete
    /// schedules are tested.
    pub planarity_pruning: bool,
    /// Six-cycle rotation dichotomy: for every 6-cycle `e0 … e5`, either
    /// each `π_{e_j}` meets `e_{j+3}` before both `e_{j+2}` and `e_{j+4}`, or
    /// each meets it after both.
    pub prune_c6_rotation: bool,
    /// Fix the relative order of two crossings on one edge when a graph
    /// automorphism maps every schedule to one with the opposite order.
    pub symmetry_break_first_edge: bool,
    /// Bound on the number of extension attempts.
    pub node_limit: Option<u64>,
    /// Split the search into independent branches. The branches are run in
    /// order here; the `thrackle` crate runs them in parallel.
    pub parallel_branching: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            edge_order: EdgeOrder::EulerWalk,
            planarity_pruning: true,
            prune_c6_rotation: false,
            symmetry_break_first_edge: false,
            node_limit: None,
            parallel_branching: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Extension attempts.
    pub nodes: u64,
    pub planarity_calls: u64,
    pub planarity_prunes: u64,
    pub rotation_prunes: u64,
    pub symmetry_prunes: u64,
    /// Complete schedules reached (planar or not).
    pub complete_schedules: u64,
    /// Largest number of crossings placed on one path.
    pub max_depth: usize,
}

impl SearchStats {
    pub fn merge(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.planarity_calls += o.planarity_calls;
        self.planarity_prunes += o.planarity_prunes;
        self.rotation_prunes += o.rotation_prunes;
        self.symmetry_prunes += o.symmetry_prunes;
        self.complete_schedules += o.complete_schedules;
        self.max_depth = self.max_depth.max(o.max_depth);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Thrackleable(ThrackleWitness),
    NotThrackleable { nodes: u64, max_depth: usize },
    Inconclusive { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub outcome: Outcome,
    pub stats: SearchStats,
}

impl Decision {
    pub fn is_thrackleable(&self) -> bool {
        matches!(self.outcome, Outcome::Thrackleable(_))
    }

    pub fn is_not_thrackleable(&self) -> bool {
        matches!(self.outcome, Outcome::NotThrackleable { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self.outcome, Outcome::Inconclusive { .. })
    }

    pub fn witness(&self) -> Option<&ThrackleWitness> {
        match &self.outcome {
            Outcome::Thrackleable(w) => Some(w),
            _ => None,
        }
    }
}

/// One step of the search: cross the current edge with `partner`, placing
/// the current edge at index `pos` of `π_partner`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Choice {
    pub partner: EdgeId,
    pub pos: usize,
}

/// Result of exploring one branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchResult {
    /// A complete schedule with a planar gadget graph, in the caller's edge
    /// orientation.
    Found(CrossingSchedule),
    Exhausted,
    NodeLimit,
    Cancelled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

#[derive(Clone, Copy, Debug)]
struct SymmetryRule {
    edge: EdgeId,
    first: EdgeId,
    second: EdgeId,
}

/// Precomputed search data for one graph. Cheap to clone for parallel use.
#[derive(Clone, Debug)]
pub struct Searcher {
    /// Caller's graph.
    input: Graph,
    /// Same graph, oriented along the processing order.
    oriented: Graph,
    flipped: Vec<bool>,
    order: Vec<EdgeId>,
    /// Earlier disjoint edges of each edge, in processing order.
    partners: Vec<Vec<EdgeId>>,
    /// 6-cycles as (edge, read reversed) in cyclic order.
    hexagons: Vec<[(EdgeId, bool); 6]>,
    hexagons_of: Vec<Vec<usize>>,
    symmetry: Option<SymmetryRule>,
    opts: SearchOptions,
}

/// Mutable state of a running search.
struct Run<'a, 'c> {
    s: &'a Searcher,
    lists: Vec<Vec<EdgeId>>,
    modes: Vec<EdgeMode>,
    builder: GadgetBuilder,
    stats: SearchStats,
    depth: usize,
    path: Vec<Choice>,
    prefix: &'a [Choice],
    /// Collect surviving prefixes of this length instead of descending.
    collect_at: Option<usize>,
    collected: Vec<Vec<Choice>>,
    /// Collect every complete planar schedule instead of stopping at the first.
    enumerate: Option<usize>,
    found: Vec<CrossingSchedule>,
    result: Option<BranchResult>,
    cancel: &'c dyn Fn(&SearchStats) -> bool,
    node_budget: Option<u64>,
}

impl Searcher {
    pub fn new(g: &Graph, opts: &SearchOptions) -> Self {
        let m = g.edge_count();
        let (order, walk_oriented) = match opts.edge_order {
            EdgeOrder::EulerWalk => match euler_walk(g) {
                Ok(Some(w)) => {
                    let vs = w.vertices(g);
                    (w.edges.clone(), Some(vs))
                }
                _ => (connected_edge_order(g), None),
            },
            EdgeOrder::DfsFallback => (connected_edge_order(g), None),
        };
        let mut oriented = g.clone();
        let mut flipped = vec![false; m];
        match walk_oriented {
            Some(vs) => {
                for (i, &e) in order.iter().enumerate() {
                    if oriented.edge(e).tail != vs[i] {
                        oriented.reverse_edge(e);
                        flipped[e] = true;
                    }
                }
            }
            None => {
                let mut reached = vec![false; g.vertex_count()];
                for (i, &e) in order.iter().enumerate() {
                    let ed = oriented.edge(e);
                    if i > 0 && !reached[ed.tail] && reached[ed.head] {
                        oriented.reverse_edge(e);
                        flipped[e] = true;
                    }
                    reached[ed.tail] = true;
                    reached[ed.head] = true;
                }
            }
        }
        let mut partners = vec![Vec::new(); m];
        for (i, &f) in order.iter().enumerate() {
            let ef = oriented.edge(f);
            partners[f] = order[..i]
                .iter()
                .copied()
                .filter(|&e| !oriented.edge(e).shares_vertex(&ef))
                .collect();
        }
        let mut hexagons = Vec::new();
        let mut hexagons_of = vec![Vec::new(); m];
        if opts.prune_c6_rotation {
            for c in cycles_up_to(&oriented, 6).into_iter().filter(|c| c.len() == 6) {
                let mut arr = [(0, false); 6];
                // The walk starts at the vertex shared by c[5] and c[0].
                let e0 = oriented.edge(c[0]);
                let e5 = oriented.edge(c[5]);
                let mut v = if e0.touches(e5.tail) { e5.tail } else { e5.head };
                for (j, &e) in c.iter().enumerate() {
                    let ed = oriented.edge(e);
                    arr[j] = (e, ed.tail != v);
                    v = ed.other(v);
                }
                for &(e, _) in &arr {
                    hexagons_of[e].push(hexagons.len());
                }
                hexagons.push(arr);
            }
        }
        let symmetry = if opts.symmetry_break_first_edge {
            find_symmetry_rule(&oriented, &order)
        } else {
            None
        };
        Searcher {
            input: g.clone(),
            oriented,
            flipped,
            order,
            partners,
            hexagons,
            hexagons_of,
            symmetry,
            opts: *opts,
        }
    }

    pub fn options(&self) -> &SearchOptions {
        &self.opts
    }

    /// Processing order of the edges.
    pub fn order(&self) -> &[EdgeId] {
        &self.order
    }

    /// Number of complete schedules, `∏ m(e)!`, saturating.
    pub fn schedule_space(&self) -> u128 {
        let mut total: u128 = 1;
        for e in 0..self.oriented.edge_count() {
            let me = self.oriented.disjoint_edges(e).unwrap().len() as u128;
            for i in 2..=me {
                total = total.saturating_mul(i);
            }
        }
        total
    }

    fn run<'a, 'c>(&'a self, prefix: &'a [Choice], cancel: &'c dyn Fn(&SearchStats) -> bool) -> Run<'a, 'c> {
        let m = self.oriented.edge_count();
        Run {
            s: self,
            lists: vec![Vec::new(); m],
            modes: vec![EdgeMode::Absent; m],
            builder: GadgetBuilder::new(self.oriented.vertex_count(), m),
            stats: SearchStats::default(),
            depth: 0,
            path: Vec::new(),
            prefix,
            collect_at: None,
            collected: Vec::new(),
            enumerate: None,
            found: Vec::new(),
            result: None,
            cancel,
            node_budget: self.opts.node_limit,
        }
    }

    /// Explores the subtree below `prefix` (choices as returned by
    /// [`Searcher::frontier`]). `cancel` is polled periodically.
    pub fn explore(&self, prefix: &[Choice], cancel: &dyn Fn(&SearchStats) -> bool) -> (BranchResult, SearchStats) {
        let mut r = self.run(prefix, cancel);
        r.visit(0);
        let res = r.result.take().unwrap_or(BranchResult::Exhausted);
        (res, r.stats)
    }

    /// All choice prefixes of length `depth` that survive pruning, in search
    /// order, plus shorter prefixes that already complete a schedule. The
    /// subtrees below them partition the remaining search space.
    pub fn frontier(&self, depth: usize) -> (Vec<Vec<Choice>>, SearchStats) {
        let never = |_: &SearchStats| false;
        let mut r = self.run(&[], &never);
        r.collect_at = Some(depth);
        r.node_budget = None;
        r.visit(0);
        (r.collected, r.stats)
    }

    /// Turns a branch result into a decision. `stats` should cover the whole
    /// search.
    pub fn decision(&self, result: BranchResult, stats: SearchStats) -> Decision {
        let outcome = match result {
            BranchResult::Found(s) => {
                let w = ThrackleWitness::embedded(self.input.clone(), s)
                    .expect("search schedules are consistent")
                    .expect("search only reports planar schedules");
                Outcome::Thrackleable(w)
            }
            BranchResult::Exhausted => Outcome::NotThrackleable {
                nodes: stats.nodes,
                max_depth: stats.max_depth,
            },
            BranchResult::NodeLimit | BranchResult::Cancelled => Outcome::Inconclusive { nodes: stats.nodes },
        };
        Decision { outcome, stats }
    }

    fn to_input_orientation(&self, lists: &[Vec<EdgeId>]) -> CrossingSchedule {
        let mut out = lists.to_vec();
        for (e, l) in out.iter_mut().enumerate() {
            if self.flipped[e] {
                l.reverse();
            }
        }
        CrossingSchedule::from_lists(out)
    }
}

const CANCEL_POLL: u64 = 1024;

impl Run<'_, '_> {
    fn planar(&mut self) -> bool {
        self.stats.planarity_calls += 1;
        self.builder.run(self.s.oriented.edges(), &self.lists, &self.modes, false);
        planarity::is_planar_pairs(self.builder.vertex_count, &self.builder.pairs)
    }

    fn stop(&mut self, r: BranchResult) -> Flow {
        self.result = Some(r);
        Flow::Stop
    }

    /// Processes the edge at index `t` of the order.
    fn visit(&mut self, t: usize) -> Flow {
        let s = self.s;
        if t == s.order.len() {
            return self.leaf();
        }
        let f = s.order[t];
        let need = s.partners[f].len();
        if self.lists[f].len() == need {
            self.modes[f] = EdgeMode::Full;
            let ok = !s.opts.planarity_pruning || self.planar();
            let flow = if ok {
                self.visit(t + 1)
            } else {
                self.stats.planarity_prunes += 1;
                Flow::Continue
            };
            self.modes[f] = if need == 0 { EdgeMode::Absent } else { EdgeMode::Open };
            return flow;
        }
        if self.lists[f].is_empty() {
            self.modes[f] = EdgeMode::Open;
        }
        if let Some(d) = self.collect_at {
            if self.depth == d {
                self.collected.push(self.path.clone());
                self.reset_mode(f);
                return Flow::Continue;
            }
        }
        let forced = self.prefix.get(self.depth).copied();
        for pi in 0..need {
            let e = s.partners[f][pi];
            if self.lists[f].contains(&e) {
                continue;
            }
            if let Some(c) = forced {
                if c.partner != e {
                    continue;
                }
            }
            let len = self.lists[e].len();
            for pos in 0..=len {
                if let Some(c) = forced {
                    if c.pos != pos {
                        continue;
                    }
                }
                if forced.is_none() {
                    self.stats.nodes += 1;
                    if let Some(b) = self.node_budget {
                        if self.stats.nodes > b {
                            self.reset_mode(f);
                            return self.stop(BranchResult::NodeLimit);
                        }
                    }
                    if self.stats.nodes.is_multiple_of(CANCEL_POLL) && (self.cancel)(&self.stats) {
                        self.reset_mode(f);
                        return self.stop(BranchResult::Cancelled);
                    }
                }
                self.lists[e].insert(pos, f);
                self.lists[f].push(e);
                self.depth += 1;
                self.path.push(Choice { partner: e, pos });
                self.stats.max_depth = self.stats.max_depth.max(self.depth);
                let flow = if !self.rotation_ok(e, f) {
                    self.stats.rotation_prunes += 1;
                    Flow::Continue
                } else if !self.symmetry_ok() {
                    self.stats.symmetry_prunes += 1;
                    Flow::Continue
                } else if self.lists[f].len() < need && s.opts.planarity_pruning && !self.planar() {
                    self.stats.planarity_prunes += 1;
                    Flow::Continue
                } else {
                    self.visit(t)
                };
                self.path.pop();
                self.depth -= 1;
                self.lists[f].pop();
                self.lists[e].remove(pos);
                if flow == Flow::Stop {
                    self.reset_mode(f);
                    return Flow::Stop;
                }
            }
        }
        self.reset_mode(f);
        Flow::Continue
    }

    fn reset_mode(&mut self, f: EdgeId) {
        if self.lists[f].is_empty() {
            self.modes[f] = EdgeMode::Absent;
        }
    }

    fn leaf(&mut self) -> Flow {
        if let Some(d) = self.collect_at {
            // Complete before reaching the frontier depth: keep as a branch.
            if self.depth <= d {
                self.collected.push(self.path.clone());
            }
            return Flow::Continue;
        }
        self.stats.complete_schedules += 1;
        if !self.s.opts.planarity_pruning && !self.planar() {
            return Flow::Continue;
        }
        let sched = self.s.to_input_orientation(&self.lists);
        match self.enumerate {
            Some(limit) => {
                self.found.push(sched);
                if self.found.len() >= limit {
                    return self.stop(BranchResult::Exhausted);
                }
                Flow::Continue
            }
            None => self.stop(BranchResult::Found(sched)),
        }
    }

    fn rotation_ok(&self, a: EdgeId, b: EdgeId) -> bool {
        let s = self.s;
        if !s.opts.prune_c6_rotation {
            return true;
        }
        s.hexagons_of[a]
            .iter()
            .chain(&s.hexagons_of[b])
            .all(|&h| hexagon_ok(&s.hexagons[h], &self.lists))
    }

    fn symmetry_ok(&self) -> bool {
        match self.s.symmetry {
            None => true,
            Some(r) => {
                let l = &self.lists[r.edge];
                match (
                    l.iter().position(|&x| x == r.first),
                    l.iter().position(|&x| x == r.second),
                ) {
                    (Some(i), Some(j)) => i < j,
                    _ => true,
                }
            }
        }
    }
}

/// Checks the 6-cycle dichotomy on the relative orders already fixed.
fn hexagon_ok(h: &[(EdgeId, bool); 6], lists: &[Vec<EdgeId>]) -> bool {
    let mut first_ok = true;
    let mut last_ok = true;
    for j in 0..6 {
        let (e, rev) = h[j];
        let l = &lists[e];
        let pos = |x: EdgeId| l.iter().position(|&y| y == x);
        let Some(pa) = pos(h[(j + 3) % 6].0) else {
            continue;
        };
        for k in [2, 4] {
            if let Some(px) = pos(h[(j + k) % 6].0) {
                if (pa < px) != rev {
                    last_ok = false;
                } else {
                    first_ok = false;
                }
            }
        }
        if !first_ok && !last_ok {
            return false;
        }
    }
    true
}

/// Automorphisms of a small graph as vertex permutations, up to `limit`.
fn automorphisms(g: &Graph, limit: usize) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        adj[e.tail][e.head] = true;
        adj[e.head][e.tail] = true;
    }
    // Vertex order in which each vertex after the first in its component has
    // an earlier neighbour.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let v = order[i];
            i += 1;
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        adj: &[Vec<bool>],
        order: &[VertexId],
        i: usize,
        map: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Vec<VertexId>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if i == order.len() {
            out.push(map.to_vec());
            return;
        }
        let v = order[i];
        for c in 0..map.len() {
            if used[c] || g.degree(c) != g.degree(v) {
                continue;
            }
            let ok = order[..i].iter().all(|&u| adj[u][v] == adj[map[u]][c]);
            if !ok {
                continue;
            }
            map[v] = c;
            used[c] = true;
            rec(g, adj, order, i + 1, map, used, out, limit);
            used[c] = false;
            map[v] = usize::MAX;
        }
    }
    rec(g, &adj, &order, 0, &mut map, &mut used, &mut out, limit);
    out
}

/// First rule `(e, a, b)` in processing order such that some automorphism
/// fixes `e` and `{a, b}` and reverses the relative order of `a` and `b` in
/// `π_e` (by swapping them, by reversing `e`, but not both).
fn find_symmetry_rule(g: &Graph, order: &[EdgeId]) -> Option<SymmetryRule> {
    const MAX_AUTOMORPHISMS: usize = 4096;
    let autos = automorphisms(g, MAX_AUTOMORPHISMS);
    let image = |sigma: &[VertexId], e: EdgeId| -> (EdgeId, bool) {
        let ed = g.edge(e);
        let (a, b) = (sigma[ed.tail], sigma[ed.head]);
        let f = g.find_edge(a, b).expect("automorphism maps edges to edges");
        (f, g.edge(f).tail != a)
    };
    let rank: Vec<usize> = {
        let mut r = vec![0; g.edge_count()];
        for (i, &e) in order.iter().enumerate() {
            r[e] = i;
        }
        r
    };
    for &e in order {
        let mut disjoint = g.disjoint_edges(e).ok()?;
        if disjoint.len() < 2 {
            continue;
        }
        disjoint.sort_by_key(|&x| rank[x]);
        for (i, &a) in disjoint.iter().enumerate() {
            for &b in &disjoint[i + 1..] {
                for sigma in &autos {
                    let (fe, rev) = image(sigma, e);
                    if fe != e {
                        continue;
                    }
                    let (fa, _) = image(sigma, a);
                    let (fb, _) = image(sigma, b);
                    let swap = fa == b && fb == a;
                    let fix = fa == a && fb == b;
                    if (swap || fix) && (swap != rev) {
                        return Some(SymmetryRule {
                            edge: e,
                            first: a,
                            second: b,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Decides thrackleability by exhaustive pruned search.
pub fn is_thrackleable(g: &Graph, opts: &SearchOptions) -> Decision {
    let s = Searcher::new(g, opts);
    let never = |_: &SearchStats| false;
    let (res, stats) = s.explore(&[], &never);
    s.decision(res, stats)
}

/// Collects up to `limit` complete schedules with planar gadget graphs, as
/// embedded witnesses, in search order.
pub fn enumerate_witnesses(g: &Graph, opts: &SearchOptions, limit: usize) -> (Vec<ThrackleWitness>, SearchStats) {
    let s = Searcher::new(g, opts);
    let never = |_: &SearchStats| false;
    let mut r = s.run(&[], &never);
    r.enumerate = Some(limit);
    if limit > 0 {
        r.visit(0);
    }
    let stats = r.stats;
    let out = r
        .found
        .into_iter()
        .map(|sch| {
            ThrackleWitness::embedded(g.clone(), sch)
                .expect("search schedules are consistent")
                .expect("search only reports planar schedules")
        })
        .collect();
    (out, stats)
}
