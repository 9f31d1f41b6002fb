//! Conway doubling of an odd cycle in a thrackle witness.
//!
//! Every cycle vertex `v` splits into `v1` (keeps the id of `v`) and `v2`
//! (id `n + i` for the `i`-th cycle vertex). Cycle edge `c_i` from `v_i` to
//! `v_{i+1}` becomes two strands running alongside it: `L_i` on its left
//! (keeps the id of `c_i`, runs `v_i2 -> v_{i+1}1`) and `R_i` on its right
//! (id `m + i`, runs `v_i1 -> v_{i+1}2`). Other edges at `v` go to `v1` when
//! they leave `v` on the left of the cycle and to `v2` otherwise.
//!
//! All side information is read from the rotation system of the gadget
//! graph embedding. Within a small disk around `v` the curves at `v1` are
//! straight rays and the curves at `v2` spiral once around `v1`, which
//! gives the near-vertex crossing orders below. The two strands of a cycle
//! edge cross inside the disk around its head.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cycles::{cycle_edges, is_simple_cycle};
use crate::embedding::PlanarEmbedding;
use crate::gadget::{GadgetEdge, GadgetGraph};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::planarity;
use crate::schedule::CrossingSchedule;
use crate::witness::{validate_witness, ThrackleWitness};
use crate::DoublingError;

struct Context<'a> {
    w: &'a ThrackleWitness,
    gadget: GadgetGraph,
    emb: PlanarEmbedding,
    /// Cycle position of each cycle edge, `usize::MAX` elsewhere.
    cycle_pos: Vec<usize>,
    /// Cycle edge stored against the cycle direction.
    reversed: Vec<bool>,
}

impl Context<'_> {
    /// Gadget path of `e` read along its direction of travel: the cycle
    /// direction for cycle edges, the stored orientation otherwise.
    fn path(&self, e: EdgeId) -> Vec<VertexId> {
        let mut p = self.gadget.paths[e].clone();
        if self.cycle_pos[e] != usize::MAX && self.reversed[self.cycle_pos[e]] {
            p.reverse();
        }
        p
    }

    /// `π_e` read along the direction of travel of `e`.
    fn pi(&self, e: EdgeId) -> Vec<EdgeId> {
        let mut p = self.w.schedule.pi(e).to_vec();
        if self.cycle_pos[e] != usize::MAX && self.reversed[self.cycle_pos[e]] {
            p.reverse();
        }
        p
    }

    /// Whether `f` arrives at its crossing with `e` from the left of `e`.
    fn arrives_from_left(&self, e: EdgeId, f: EdgeId) -> bool {
        let x = self.gadget.crossing_vertex(e, f).expect("scheduled crossing");
        let pe = self.path(e);
        let pf = self.path(f);
        let i = pe.iter().position(|&y| y == x).unwrap();
        let j = pf.iter().position(|&y| y == x).unwrap();
        let e_after = pe[i + 1];
        let f_before = pf[j - 1];
        let nbrs: Vec<VertexId> = self
            .emb
            .rotation(x)
            .iter()
            .map(|&ge| {
                let ge = self.gadget.graph.edge(ge);
                ge.other(x)
            })
            .collect();
        let a = nbrs.iter().position(|&y| y == e_after).unwrap();
        nbrs[(a + 1) % nbrs.len()] == f_before
    }

    /// Original edges at `v` in counter-clockwise order.
    fn rotation_at(&self, v: VertexId) -> Vec<EdgeId> {
        self.emb
            .rotation(v)
            .iter()
            .filter_map(|&ge| match self.gadget.edge_kinds[ge] {
                GadgetEdge::Segment(e) => Some(e),
                GadgetEdge::Frame(_) => None,
            })
            .collect()
    }
}

/// Crossing orders inside the disk around one cycle vertex, each read from
/// the vertex outward.
struct LocalDisk {
    /// Non-cycle edges on the left (counter-clockwise from the out-edge).
    e1: Vec<EdgeId>,
    /// Non-cycle edges on the right.
    e2: Vec<EdgeId>,
    lists: Vec<(EdgeId, Vec<EdgeId>)>,
}

impl LocalDisk {
    fn list(&self, e: EdgeId) -> &[EdgeId] {
        self.lists
            .iter()
            .find(|(f, _)| *f == e)
            .map(|(_, l)| l.as_slice())
            .unwrap_or(&[])
    }
}

/// Applies Conway doubling to the odd cycle given by its vertex sequence.
pub fn conway_double(w: &ThrackleWitness, cycle: &[VertexId]) -> Result<ThrackleWitness, DoublingError> {
    let g = &w.graph;
    if !is_simple_cycle(g, cycle) {
        return Err(DoublingError::NotACycle);
    }
    let k = cycle.len();
    if k.is_multiple_of(2) {
        return Err(DoublingError::NotOddCycle(k));
    }
    if !validate_witness(w).passed() {
        return Err(DoublingError::InvalidWitness);
    }
    let gadget = w.gadget().map_err(|_| DoublingError::InvalidWitness)?;
    let emb = match &w.embedding {
        Some(e) => e.clone(),
        None => planarity::embed(&gadget.graph)
            .embedding
            .ok_or(DoublingError::InvalidWitness)?,
    };
    let (n, m) = (g.vertex_count(), g.edge_count());
    let cedges = cycle_edges(g, cycle).ok_or(DoublingError::NotACycle)?;
    let mut cycle_pos = vec![usize::MAX; m];
    let mut vpos = vec![usize::MAX; n];
    let mut reversed = vec![false; k];
    for (i, &e) in cedges.iter().enumerate() {
        cycle_pos[e] = i;
        vpos[cycle[i]] = i;
        reversed[i] = g.edge(e).tail != cycle[i];
    }
    let ctx = Context {
        w,
        gadget,
        emb,
        cycle_pos,
        reversed,
    };
    let strand_l = |i: usize| cedges[i % k];
    let strand_r = |i: usize| m + i % k;
    let prev = |i: usize| (i + k - 1) % k;

    // Near-vertex disks.
    let mut disks = Vec::with_capacity(k);
    for i in 0..k {
        let v = cycle[i];
        let out = cedges[i];
        let inn = cedges[prev(i)];
        let rot = ctx.rotation_at(v);
        let s = rot.iter().position(|&e| e == out).unwrap();
        let mut e1 = Vec::new();
        let mut e2 = Vec::new();
        let mut seen_in = false;
        for t in 1..rot.len() {
            let e = rot[(s + t) % rot.len()];
            if e == inn {
                seen_in = true;
            } else if seen_in {
                e2.push(e);
            } else {
                e1.push(e);
            }
        }
        let (o_l, o_r) = (strand_l(i), strand_r(i));
        let (i_l, i_r) = (strand_l(prev(i)), strand_r(prev(i)));
        let mut lists = Vec::new();
        // Rays from v1, crossing the spirals from the innermost out.
        let mut inner: Vec<EdgeId> = vec![i_r];
        inner.extend(&e2);
        lists.push((o_r, inner.clone()));
        let mut full = inner;
        full.push(o_l);
        for &f in &e1 {
            lists.push((f, full.clone()));
        }
        lists.push((i_l, full));
        // Spirals from v2, crossing the rays clockwise.
        let mut cw: Vec<EdgeId> = vec![i_l];
        cw.extend(e1.iter().rev());
        lists.push((o_l, cw.clone()));
        cw.push(o_r);
        for &f in &e2 {
            lists.push((f, cw.clone()));
        }
        lists.push((i_r, cw));
        disks.push(LocalDisk { e1, e2, lists });
    }

    // Far crossings, expanded for strands.
    let expand_for_strand = |i: usize| -> Vec<EdgeId> {
        let c = cedges[i];
        let mut out = Vec::new();
        for f in ctx.pi(c) {
            match ctx.cycle_pos[f] {
                usize::MAX => out.push(f),
                j => {
                    if ctx.arrives_from_left(c, f) {
                        out.extend([strand_r(j), strand_l(j)]);
                    } else {
                        out.extend([strand_l(j), strand_r(j)]);
                    }
                }
            }
        }
        out
    };
    let expand_for_edge = |f: EdgeId| -> Vec<EdgeId> {
        let mut out = Vec::new();
        for c in ctx.pi(f) {
            match ctx.cycle_pos[c] {
                usize::MAX => out.push(c),
                j => {
                    if ctx.arrives_from_left(c, f) {
                        out.extend([strand_l(j), strand_r(j)]);
                    } else {
                        out.extend([strand_r(j), strand_l(j)]);
                    }
                }
            }
        }
        out
    };

    let mut ends: Vec<(VertexId, VertexId)> = vec![(0, 0); m + k];
    let mut lists: Vec<Vec<EdgeId>> = vec![Vec::new(); m + k];
    for i in 0..k {
        let j = (i + 1) % k;
        let mid = expand_for_strand(i);
        let head_disk = &disks[j];
        for (id, tail, head) in [(strand_l(i), n + i, cycle[j]), (strand_r(i), cycle[i], n + j)] {
            ends[id] = (tail, head);
            let mut l = disks[i].list(id).to_vec();
            l.extend(&mid);
            l.extend(head_disk.list(id).iter().rev());
            lists[id] = l;
        }
    }
    for f in 0..m {
        if ctx.cycle_pos[f] != usize::MAX {
            continue;
        }
        let ed = g.edge(f);
        let attach = |v: VertexId| -> VertexId {
            match vpos[v] {
                usize::MAX => v,
                i if disks[i].e2.contains(&f) => n + i,
                i => {
                    debug_assert!(disks[i].e1.contains(&f));
                    v
                }
            }
        };
        ends[f] = (attach(ed.tail), attach(ed.head));
        let mut l = Vec::new();
        if vpos[ed.tail] != usize::MAX {
            l.extend(disks[vpos[ed.tail]].list(f));
        }
        l.extend(expand_for_edge(f));
        if vpos[ed.head] != usize::MAX {
            l.extend(disks[vpos[ed.head]].list(f).iter().rev());
        }
        lists[f] = l;
    }

    let graph = Graph::with_edges(n + k, &ends)
        .map_err(|e| DoublingError::DoublingFailed(format!("doubled graph: {e}")))?;
    let schedule = CrossingSchedule::from_lists(lists);
    let out = ThrackleWitness::embedded(graph, schedule)
        .map_err(|e| DoublingError::DoublingFailed(format!("doubled schedule: {e}")))?
        .ok_or_else(|| DoublingError::DoublingFailed("doubled gadget graph is not planar".into()))?;
    let report = validate_witness(&out);
    if !report.passed() {
        return Err(DoublingError::DoublingFailed(format!(
            "doubled witness fails validation: {:?}",
            report.failures
        )));
    }
    Ok(out)
}
