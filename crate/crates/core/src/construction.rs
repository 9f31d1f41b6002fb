//! Plane graphs of girth `ml` whose inner faces have sizes `ml` and
//! `m(l+1)`, with every inner edge on exactly one shortest cycle, and an
//! auditor for those conditions.
//!
//! The `m = 1` graphs are grown from an `l`-cycle by attaching one face at a
//! time to the outer boundary. Each boundary edge remembers whether its
//! inner face is short (`l`, "black") or long (`l + 1`, "white"); a new face
//! of one colour may only cover boundary edges of the other colour, so every
//! inner edge ends up between a black and a white face. A new face is only
//! attached if every other path between its endpoints is long enough that
//! no new cycle of length at most `l` appears, besides the face itself.
//!
//! Faces are attached in a helix: each one covers the newest edges of the
//! previous face and the oldest edges of the boundary. A depth-first search
//! over these choices stops when a search state repeats along the current
//! path; the moves in between form a period that can be replayed forever.
//! The prefix ends, and the period starts, at a boundary of length `2l`.
//! For `m > 1` every edge is subdivided into
//! `m` pieces.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cycles::{cycles_up_to, girth, has_cycle_of_length};
use crate::embedding::{dart_edge, PlanarEmbedding};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::ConstructionError;

/// A graph with a plane embedding and a designated outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    pub graph: Graph,
    pub embedding: PlanarEmbedding,
    /// Index into `embedding.faces()`.
    pub outer_face: usize,
}

impl EmbeddedGraph {
    /// Uses the embedding's own outer face.
    pub fn new(graph: Graph, embedding: PlanarEmbedding) -> Result<Self, ConstructionError> {
        if !embedding.embeds(&graph) || !embedding.is_valid() {
            return Err(ConstructionError::InvalidEmbedding);
        }
        let outer_face = embedding.outer_face();
        Ok(EmbeddedGraph {
            graph,
            embedding,
            outer_face,
        })
    }

    /// Builds the embedding from closed face walks (vertex sequences) that
    /// together traverse every edge once in each direction. `outer` is the
    /// index of the outer walk.
    pub fn from_faces(graph: Graph, walks: &[Vec<VertexId>], outer: usize) -> Result<Self, ConstructionError> {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        let bad = || ConstructionError::InvalidEmbedding;
        // succ[dart into v] = edge leaving v next along the same face.
        let mut succ: BTreeMap<(VertexId, EdgeId), EdgeId> = BTreeMap::new();
        for w in walks {
            let k = w.len();
            for i in 0..k {
                let (u, v, x) = (w[(i + k - 1) % k], w[i], w[(i + 1) % k]);
                let a = graph.find_edge(u, v).ok_or_else(bad)?;
                let b = graph.find_edge(v, x).ok_or_else(bad)?;
                if succ.insert((v, a), b).is_some() {
                    return Err(bad());
                }
            }
        }
        let mut rotation = vec![Vec::new(); n];
        for (v, rot) in rotation.iter_mut().enumerate() {
            let inc = graph.incident(v);
            let Some(&first) = inc.first() else { continue };
            let mut e = first;
            loop {
                rot.push(e);
                e = *succ.get(&(v, e)).ok_or_else(bad)?;
                if e == first {
                    break;
                }
                if rot.len() > inc.len() {
                    return Err(bad());
                }
            }
            if rot.len() != inc.len() {
                return Err(bad());
            }
        }
        let ends = graph.edges().iter().map(|e| (e.tail, e.head)).collect();
        let embedding = PlanarEmbedding::from_rotation(ends, rotation).map_err(|_| bad())?;
        if embedding.edge_count() != m || !embedding.is_valid() {
            return Err(bad());
        }
        // Locate the outer walk among the traced faces by its first dart.
        let w = &walks[outer];
        let e0 = graph.find_edge(w[0], w[1]).ok_or_else(bad)?;
        let d0 = crate::embedding::dart(e0, graph.edge(e0).tail != w[0]);
        let outer_face = embedding
            .faces()
            .iter()
            .position(|f| f.contains(&d0))
            .ok_or_else(bad)?;
        Ok(EmbeddedGraph {
            graph,
            embedding,
            outer_face,
        })
    }

    /// Replaces every edge by a path of `k` edges, keeping the embedding and
    /// the outer face.
    pub fn subdivide(&self, k: usize) -> EmbeddedGraph {
        assert!(k >= 1);
        let g = self.graph.subdivide(k);
        let n = self.graph.vertex_count();
        let mut rotation = vec![Vec::new(); g.vertex_count()];
        for (v, rot) in rotation.iter_mut().enumerate().take(n) {
            *rot = self
                .embedding
                .rotation(v)
                .iter()
                .map(|&e| if self.graph.edge(e).tail == v { k * e } else { k * e + k - 1 })
                .collect();
        }
        for e in 0..self.graph.edge_count() {
            for j in 1..k {
                rotation[n + e * (k - 1) + (j - 1)] = vec![k * e + j - 1, k * e + j];
            }
        }
        let ends = g.edges().iter().map(|e| (e.tail, e.head)).collect();
        let embedding = PlanarEmbedding::from_rotation(ends, rotation).expect("subdivision keeps the embedding");
        let d0 = self.embedding.faces()[self.outer_face][0];
        let e0 = dart_edge(d0);
        let reversed = d0 % 2 == 1;
        let new_e = if reversed { k * e0 + k - 1 } else { k * e0 };
        let nd = crate::embedding::dart(new_e, reversed);
        let outer_face = embedding.faces().iter().position(|f| f.contains(&nd)).expect("dart lies on a face");
        EmbeddedGraph {
            graph: g,
            embedding,
            outer_face,
        }
    }

    /// Removes edge `e`; later edge ids shift down by one. The faces on
    /// both sides of `e` merge; the outer face keeps a dart not on `e`.
    pub fn delete_edge(&self, e: EdgeId) -> Result<EmbeddedGraph, ConstructionError> {
        let bad = || ConstructionError::InvalidEmbedding;
        if e >= self.graph.edge_count() {
            return Err(bad());
        }
        let shift = |x: EdgeId| if x > e { x - 1 } else { x };
        let pairs: Vec<(VertexId, VertexId)> = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, x)| (x.tail, x.head))
            .collect();
        let graph = Graph::with_edges(self.graph.vertex_count(), &pairs).map_err(|_| bad())?;
        let rotation = self
            .embedding
            .rotations()
            .iter()
            .map(|rot| rot.iter().copied().filter(|&x| x != e).map(shift).collect())
            .collect();
        let embedding = PlanarEmbedding::from_rotation(pairs, rotation).map_err(|_| bad())?;
        let d0 = *self.embedding.faces()[self.outer_face]
            .iter()
            .find(|&&d| dart_edge(d) != e)
            .ok_or_else(bad)?;
        let nd = crate::embedding::dart(shift(dart_edge(d0)), d0 % 2 == 1);
        let outer_face = embedding.faces().iter().position(|f| f.contains(&nd)).ok_or_else(bad)?;
        Ok(EmbeddedGraph {
            graph,
            embedding,
            outer_face,
        })
    }

    pub fn face_size(&self, f: usize) -> usize {
        self.embedding.faces()[f].len()
    }

    /// Edge set of the outer face.
    pub fn outer_edges(&self) -> BTreeSet<EdgeId> {
        self.embedding.face_edges(self.outer_face).into_iter().collect()
    }
}

/// One face attachment: cover the `s` newest edges of the boundary (all
/// from the previous face) and the `t` oldest ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Ear {
    s: usize,
    t: usize,
    black: bool,
}

/// Growth pattern: `prefix` leads from the `l`-cycle to a boundary of
/// length `2l`; each repetition of `period` returns to the same boundary
/// colours.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Pattern {
    prefix: Vec<Ear>,
    period: Vec<Ear>,
}

#[derive(Clone, Debug)]
struct Grower {
    l: usize,
    adj: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
    /// Inner faces, each traversing its edges against the neighbouring face.
    faces: Vec<Vec<VertexId>>,
    /// Outer boundary, oldest edge first; the newest face's path is at the
    /// end, closing back to `boundary[0]`.
    boundary: Vec<VertexId>,
    /// Colour of the inner face of boundary edge `i` (true for short).
    black: Vec<bool>,
    last_q: usize,
}

impl Grower {
    fn start(l: usize) -> Self {
        let mut adj = vec![Vec::new(); l];
        let mut edges = Vec::with_capacity(l);
        for i in 0..l {
            let j = (i + 1) % l;
            adj[i].push(j);
            adj[j].push(i);
            edges.push((i, j));
        }
        Grower {
            l,
            adj,
            edges,
            faces: vec![(0..l).rev().collect()],
            boundary: (0..l).collect(),
            black: vec![true; l],
            last_q: 0,
        }
    }

    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn face_len(&self, black: bool) -> usize {
        if black {
            self.l
        } else {
            self.l + 1
        }
    }

    /// Returns `(p, q)` if the ear is admissible.
    fn admissible(&self, ear: Ear) -> Option<(usize, usize)> {
        let k = self.boundary.len();
        let p = ear.s + ear.t;
        if p == 0 || p >= k || ear.s > self.last_q {
            return None;
        }
        let size = self.face_len(ear.black);
        if p >= size {
            return None;
        }
        let q = size - p;
        let i0 = k - ear.s;
        let path: Vec<VertexId> = (0..=p).map(|j| self.boundary[(i0 + j) % k]).collect();
        if (0..p).any(|j| self.black[(i0 + j) % k] == ear.black) {
            return None;
        }
        let (x, y) = (path[0], path[p]);
        if q == 1 && self.adj[x].contains(&y) {
            return None;
        }
        // Any other x-y path closes a cycle with the new side of length
        // q + len; it must exceed l.
        let need = self.l + 1 - q;
        for w in path.windows(2) {
            if self.distance_avoiding(x, y, (w[0], w[1]), need) < need {
                return None;
            }
        }
        Some((p, q))
    }

    /// BFS distance from `x` to `y` without edge `skip`, capped at `cap`.
    fn distance_avoiding(&self, x: VertexId, y: VertexId, skip: (VertexId, VertexId), cap: usize) -> usize {
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[x] = 0;
        queue.push_back(x);
        while let Some(v) = queue.pop_front() {
            if dist[v] + 1 >= cap {
                break;
            }
            for &w in &self.adj[v] {
                if (v, w) == skip || (w, v) == skip || dist[w] != usize::MAX {
                    continue;
                }
                dist[w] = dist[v] + 1;
                if w == y {
                    return dist[w];
                }
                queue.push_back(w);
            }
        }
        cap
    }

    fn apply(&mut self, ear: Ear, p: usize, q: usize) {
        let k = self.boundary.len();
        let i0 = k - ear.s;
        let mut b: Vec<VertexId> = (0..k).map(|j| self.boundary[(i0 + j) % k]).collect();
        let mut c: Vec<bool> = (0..k).map(|j| self.black[(i0 + j) % k]).collect();
        let (x, y) = (b[0], b[p]);
        let first_new = self.adj.len();
        let fresh: Vec<VertexId> = (first_new..first_new + q - 1).collect();
        self.adj.resize(first_new + q - 1, Vec::new());
        let mut side = vec![x];
        side.extend_from_slice(&fresh);
        side.push(y);
        for w in side.windows(2) {
            self.adj[w[0]].push(w[1]);
            self.adj[w[1]].push(w[0]);
            self.edges.push((w[0], w[1]));
        }
        let mut face: Vec<VertexId> = b[..=p].to_vec();
        face.extend(fresh.iter().rev());
        self.faces.push(face);
        // New boundary: y, the rest of the old boundary, x, the fresh path.
        let mut nb = b.split_off(p);
        nb.push(x);
        nb.extend_from_slice(&fresh);
        let mut nc = c.split_off(p);
        nc.extend(core::iter::repeat_n(ear.black, q));
        self.boundary = nb;
        self.black = nc;
        self.last_q = q;
        debug_assert_eq!(self.boundary.len(), self.black.len());
    }

    fn try_apply(&mut self, ear: Ear) -> bool {
        match self.admissible(ear) {
            Some((p, q)) => {
                self.apply(ear, p, q);
                true
            }
            None => false,
        }
    }

    /// Closed walks of all inner faces plus the outer boundary (last).
    fn walks(&self) -> Vec<Vec<VertexId>> {
        let mut w = self.faces.clone();
        w.push(self.boundary.clone());
        w
    }

    fn embedded(&self) -> EmbeddedGraph {
        let g = Graph::with_edges(self.adj.len(), &self.edges).expect("growth never repeats an edge");
        let walks = self.walks();
        let outer = walks.len() - 1;
        EmbeddedGraph::from_faces(g, &walks, outer).expect("grown faces form a plane embedding")
    }
}

/// Search state that determines every future admissibility check: the
/// boundary colours, the length of the newest side, and the distances
/// between boundary vertices through inner edges (capped at `l + 1`).
type Signature = (Vec<bool>, usize, Vec<u8>);

impl Grower {
    fn signature(&self) -> Signature {
        let k = self.boundary.len();
        let cap = self.l + 1;
        let mut on_boundary = BTreeSet::new();
        for j in 0..k {
            let (u, v) = (self.boundary[j], self.boundary[(j + 1) % k]);
            on_boundary.insert((u.min(v), u.max(v)));
        }
        let mut rows = Vec::with_capacity(k * k);
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut touched = Vec::new();
        for &x in &self.boundary {
            let mut queue = VecDeque::new();
            dist[x] = 0;
            touched.push(x);
            queue.push_back(x);
            while let Some(v) = queue.pop_front() {
                if dist[v] >= cap {
                    continue;
                }
                for &w in &self.adj[v] {
                    if dist[w] != usize::MAX || on_boundary.contains(&(v.min(w), v.max(w))) {
                        continue;
                    }
                    dist[w] = dist[v] + 1;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
            rows.extend(self.boundary.iter().map(|&y| dist[y].min(cap) as u8));
            for v in touched.drain(..) {
                dist[v] = usize::MAX;
            }
        }
        (self.black.clone(), self.last_q, rows)
    }
}

/// Depth-first search for a growth pattern. Equal signatures have equal
/// futures, so a signature that repeats along the current path yields a
/// period that can be replayed forever, and a signature whose subtree
/// failed once can be skipped everywhere.
fn find_pattern(l: usize) -> Option<Pattern> {
    let mut ctx = PatternSearch {
        cap: 2 * l + 2,
        on_path: BTreeMap::new(),
        dead: BTreeSet::new(),
        moves: Vec::new(),
        lengths: Vec::new(),
    };
    ctx.visit(&Grower::start(l))
}

struct PatternSearch {
    /// Upper bound on the boundary length.
    cap: usize,
    on_path: BTreeMap<Signature, usize>,
    dead: BTreeSet<Signature>,
    moves: Vec<Ear>,
    /// Boundary length of each state on the current path.
    lengths: Vec<usize>,
}

impl PatternSearch {
    fn visit(&mut self, g: &Grower) -> Option<Pattern> {
        let l = g.l;
        let sig = g.signature();
        if let Some(&i) = self.on_path.get(&sig) {
            // Start the period at a state with boundary length 2l.
            let j = (i..self.moves.len()).find(|&j| self.lengths[j] == 2 * l)?;
            let mut period = self.moves[j..].to_vec();
            period.extend_from_slice(&self.moves[i..j]);
            return Some(Pattern {
                prefix: self.moves[..j].to_vec(),
                period,
            });
        }
        if self.dead.contains(&sig) {
            return None;
        }
        self.on_path.insert(sig.clone(), self.moves.len());
        self.lengths.push(g.boundary.len());
        let k = g.boundary.len();
        for black in [true, false] {
            let size = g.face_len(black);
            for s in 0..=g.last_q.min(k) {
                for t in 0..k - s {
                    let p = s + t;
                    if p == 0 {
                        continue;
                    }
                    if p >= size {
                        break;
                    }
                    if k - p + (size - p) > self.cap {
                        continue;
                    }
                    let ear = Ear { s, t, black };
                    let Some((p, q)) = g.admissible(ear) else { continue };
                    let mut h = g.clone();
                    h.apply(ear, p, q);
                    self.moves.push(ear);
                    let found = self.visit(&h);
                    self.moves.pop();
                    if found.is_some() {
                        return found;
                    }
                }
            }
        }
        self.lengths.pop();
        self.on_path.remove(&sig);
        self.dead.insert(sig);
        None
    }
}

fn check_parameters(m: usize, l: usize) -> Result<(), ConstructionError> {
    if m < 1 || l < 3 {
        return Err(ConstructionError::InvalidParameters(format!(
            "need m >= 1 and l >= 3, got m={m}, l={l}"
        )));
    }
    Ok(())
}

/// Growth stages of the `m = 1` construction: stage 0 is the `l`-cycle,
/// stage 1 ends the prefix, each later stage adds one period.
struct Stages {
    grower: Grower,
    pattern: Pattern,
    stage: usize,
}

impl Stages {
    fn new(l: usize) -> Result<Self, ConstructionError> {
        let pattern = find_pattern(l).ok_or(ConstructionError::PatternNotFound(l))?;
        Ok(Stages {
            grower: Grower::start(l),
            pattern,
            stage: 0,
        })
    }

    fn advance(&mut self) {
        let ears = if self.stage == 0 {
            &self.pattern.prefix
        } else {
            &self.pattern.period
        };
        for &e in ears {
            assert!(self.grower.try_apply(e), "verified pattern replays");
        }
        self.stage += 1;
    }

    /// Vertex and edge counts after subdividing into `m` pieces.
    fn counts(&self, m: usize) -> (usize, usize) {
        let e = self.grower.edges.len();
        (self.grower.vertex_count() + (m - 1) * e, m * e)
    }
}

/// A chessboard graph with at least `n0` vertices: girth `ml`, inner faces
/// of size `ml` and `m(l+1)`, outer face `2ml`.
pub fn chessboard(m: usize, l: usize, n0: usize) -> Result<EmbeddedGraph, ConstructionError> {
    check_parameters(m, l)?;
    let mut st = Stages::new(l)?;
    st.advance();
    while st.counts(m).0 < n0 {
        st.advance();
    }
    Ok(st.grower.embedded().subdivide(m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityPoint {
    pub vertices: usize,
    pub edges: usize,
    pub ratio: BigRational,
}

/// Edge density of the smallest growth stage with at least `n0` vertices,
/// for each requested `n0`. Stage 0 (the bare `ml`-cycle) is used when it is
/// large enough.
pub fn density_trace(m: usize, l: usize, sizes: &[usize]) -> Result<Vec<DensityPoint>, ConstructionError> {
    check_parameters(m, l)?;
    let mut out = Vec::with_capacity(sizes.len());
    for &n0 in sizes {
        let mut st = Stages::new(l)?;
        while st.counts(m).0 < n0 {
            st.advance();
        }
        let (v, e) = st.counts(m);
        out.push(DensityPoint {
            vertices: v,
            edges: e,
            ratio: BigRational::new(BigInt::from(e), BigInt::from(v)),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Clause {
    /// `clause girth pass 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "pass" } else { "fail" };
        write!(f, "clause {} {} {}", self.name, verdict, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalAudit {
    pub girth: Option<usize>,
    /// Inner face size -> number of faces.
    pub face_census: BTreeMap<usize, usize>,
    pub outer_face_size: usize,
    /// Per edge, the number of inner faces of size `ml` containing it.
    pub short_faces_per_edge: Vec<usize>,
    pub second_smallest_cycle: Option<usize>,
    pub clauses: Vec<Clause>,
}

impl ExtremalAudit {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }
}

impl fmt::Display for ExtremalAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn show(x: Option<usize>) -> String {
    match x {
        Some(v) => format!("{v}"),
        None => String::from("none"),
    }
}

/// Checks the chessboard conditions for parameters `m`, `l` exactly.
pub fn audit(g: &EmbeddedGraph, m: usize, l: usize) -> ExtremalAudit {
    let short = m * l;
    let long = m * (l + 1);
    let graph = &g.graph;
    let faces = g.embedding.faces();
    let outer = g.outer_face;

    let mut face_census = BTreeMap::new();
    let mut short_faces: BTreeSet<Vec<EdgeId>> = BTreeSet::new();
    let mut short_faces_per_edge = vec![0; graph.edge_count()];
    for (i, f) in faces.iter().enumerate() {
        if i == outer {
            continue;
        }
        *face_census.entry(f.len()).or_insert(0) += 1;
        if f.len() == short {
            let mut es: Vec<EdgeId> = f.iter().map(|&d| dart_edge(d)).collect();
            es.sort_unstable();
            es.dedup();
            for &e in &es {
                short_faces_per_edge[e] += 1;
            }
            short_faces.insert(es);
        }
    }
    let outer_face_size = faces[outer].len();
    let girth = girth(graph);
    let second_smallest_cycle = girth.and_then(|gt| (gt + 1..=graph.vertex_count()).find(|&k| has_cycle_of_length(graph, k)));

    let mut clauses = Vec::new();
    let parallel = {
        let mut keys: Vec<(VertexId, VertexId)> = graph.edges().iter().map(|e| (e.tail.min(e.head), e.tail.max(e.head))).collect();
        keys.sort_unstable();
        keys.windows(2).filter(|w| w[0] == w[1]).count()
    };
    clauses.push(Clause {
        name: "simple",
        pass: parallel == 0,
        detail: format!("parallel={parallel}"),
    });
    clauses.push(Clause {
        name: "girth",
        pass: girth == Some(short),
        detail: format!("girth={} expected={short}", show(girth)),
    });
    let odd: Vec<usize> = face_census.keys().copied().filter(|&s| s != short && s != long).collect();
    clauses.push(Clause {
        name: "inner-faces",
        pass: odd.is_empty(),
        detail: format!(
            "sizes={} allowed={short},{long}",
            face_census
                .iter()
                .map(|(s, c)| format!("{s}x{c}"))
                .collect::<Vec<_>>()
                .join(",")
        ),
    });
    clauses.push(Clause {
        name: "outer-face",
        pass: outer_face_size == 2 * short,
        detail: format!("size={outer_face_size} expected={}", 2 * short),
    });

    // Every edge off the outer face lies on exactly one `ml`-cycle, and that
    // cycle is a face.
    let outer_edges = g.outer_edges();
    let mut cycles_per_edge = vec![0usize; graph.edge_count()];
    let mut non_face = 0usize;
    for mut c in cycles_up_to(graph, short).into_iter().filter(|c| c.len() == short) {
        c.sort_unstable();
        if !short_faces.contains(&c) {
            non_face += 1;
        }
        for &e in &c {
            cycles_per_edge[e] += 1;
        }
    }
    let bad_edges = (0..graph.edge_count())
        .filter(|e| !outer_edges.contains(e))
        .filter(|&e| cycles_per_edge[e] != 1 || short_faces_per_edge[e] != 1)
        .count();
    clauses.push(Clause {
        name: "unique-short-face",
        pass: bad_edges == 0 && non_face == 0,
        detail: format!("bad-edges={bad_edges} non-face-short-cycles={non_face}"),
    });
    clauses.push(Clause {
        name: "second-cycle",
        pass: second_smallest_cycle == Some(long),
        detail: format!("length={} expected={long}", show(second_smallest_cycle)),
    });

    ExtremalAudit {
        girth,
        face_census,
        outer_face_size,
        short_faces_per_edge,
        second_smallest_cycle,
        clauses,
    }
}
