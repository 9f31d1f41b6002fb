//! Combinatorial plane embeddings: rotation systems and their faces.
//!
//! A dart is `2 * e + d` for edge `e`; `d = 0` runs tail to head, `d = 1`
//! head to tail. Rotations list edge ids counter-clockwise. A face walk
//! leaves each vertex along the rotation successor of the edge it arrived on.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeId, Graph, VertexId};

pub type Dart = usize;

#[inline]
pub fn dart(e: EdgeId, reversed: bool) -> Dart {
    2 * e + reversed as usize
}

#[inline]
pub fn dart_edge(d: Dart) -> EdgeId {
    d / 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    ends: Vec<(VertexId, VertexId)>,
    rotation: Vec<Vec<EdgeId>>,
    /// Position of each edge end inside its vertex rotation (index `2e` for
    /// the tail end, `2e + 1` for the head end).
    slot: Vec<usize>,
    faces: Vec<Vec<Dart>>,
    outer_face: usize,
    /// Outer face of every component that has edges, first component first.
    component_outer: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingDefect {
    WrongVertexCount,
    /// An edge end is missing from, or repeated in, the rotation of its vertex.
    RotationMismatch(EdgeId),
    /// Vertex, edge and face counts of a component violate Euler's formula.
    EulerViolation { vertices: usize, edges: usize, faces: usize },
}

impl PlanarEmbedding {
    /// Builds an embedding from counter-clockwise rotations and traces its
    /// faces. The rotation is not required to be planar; use
    /// [`PlanarEmbedding::defects`] to check that.
    pub fn from_rotation(
        ends: Vec<(VertexId, VertexId)>,
        rotation: Vec<Vec<EdgeId>>,
    ) -> Result<Self, EmbeddingDefect> {
        let m = ends.len();
        let mut slot = vec![usize::MAX; 2 * m];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                let &(a, b) = ends.get(e).ok_or(EmbeddingDefect::RotationMismatch(e))?;
                let end = if a == v {
                    0
                } else if b == v {
                    1
                } else {
                    return Err(EmbeddingDefect::RotationMismatch(e));
                };
                if slot[2 * e + end] != usize::MAX {
                    return Err(EmbeddingDefect::RotationMismatch(e));
                }
                slot[2 * e + end] = i;
            }
        }
        for (e, &(a, b)) in ends.iter().enumerate() {
            if a >= rotation.len() || b >= rotation.len() {
                return Err(EmbeddingDefect::WrongVertexCount);
            }
            if slot[2 * e] == usize::MAX || slot[2 * e + 1] == usize::MAX {
                return Err(EmbeddingDefect::RotationMismatch(e));
            }
        }
        let mut emb = PlanarEmbedding {
            ends,
            rotation,
            slot,
            faces: Vec::new(),
            outer_face: 0,
            component_outer: Vec::new(),
        };
        emb.faces = emb.trace_faces();
        emb.pick_outer_faces();
        Ok(emb)
    }

    /// Graph view of the embedded edges (multigraph mode).
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new_multigraph(self.rotation.len());
        for &(u, v) in &self.ends {
            g.add_edge(u, v).expect("embedding ends are valid");
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self) -> &[(VertexId, VertexId)] {
        &self.ends
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotation
    }

    /// Face walks as dart sequences.
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_edges(&self, f: usize) -> Vec<EdgeId> {
        self.faces[f].iter().map(|&d| dart_edge(d)).collect()
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn component_outer_faces(&self) -> &[usize] {
        &self.component_outer
    }

    /// Origin vertex of a dart.
    pub fn dart_tail(&self, d: Dart) -> VertexId {
        let (a, b) = self.ends[d / 2];
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    /// Vertex a dart points to.
    pub fn dart_head(&self, d: Dart) -> VertexId {
        let (a, b) = self.ends[d / 2];
        if d.is_multiple_of(2) {
            b
        } else {
            a
        }
    }

    /// The dart following `d` on its face.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let e = d / 2;
        let w = self.dart_head(d);
        let arrival_end = 1 - d % 2;
        let rot = &self.rotation[w];
        let i = (self.slot[2 * e + arrival_end] + 1) % rot.len();
        let f = rot[i];
        // Leave w along f.
        if self.ends[f].0 == w {
            2 * f
        } else {
            2 * f + 1
        }
    }

    /// Counter-clockwise successor of edge `e` in the rotation at `v`.
    pub fn rotation_next(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let rot = &self.rotation[v];
        let end = if self.ends[e].0 == v { 0 } else { 1 };
        rot[(self.slot[2 * e + end] + 1) % rot.len()]
    }

    fn trace_faces(&self) -> Vec<Vec<Dart>> {
        let m = self.ends.len();
        let mut seen = vec![false; 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = self.next_dart(d);
            }
            faces.push(walk);
        }
        faces
    }

    fn vertex_components(&self) -> Vec<usize> {
        let n = self.rotation.len();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &e in &self.rotation[v] {
                    let (a, b) = self.ends[e];
                    let w = if a == v { b } else { a };
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    fn pick_outer_faces(&mut self) {
        let comp = self.vertex_components();
        let mut best: Vec<Option<usize>> = Vec::new();
        let mut order: Vec<usize> = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            let c = comp[self.dart_tail(f[0])];
            if c >= best.len() {
                best.resize(c + 1, None);
            }
            match best[c] {
                None => {
                    best[c] = Some(i);
                    order.push(c);
                }
                Some(j) if self.faces[j].len() < f.len() => best[c] = Some(i),
                _ => {}
            }
        }
        order.sort_unstable();
        self.component_outer = order.iter().map(|&c| best[c].unwrap()).collect();
        self.outer_face = self.component_outer.first().copied().unwrap_or(0);
    }

    /// Number of faces of the plane drawing: the outer faces of all
    /// components coincide.
    pub fn face_count(&self) -> usize {
        if self.component_outer.is_empty() {
            1
        } else {
            self.faces.len() + 1 - self.component_outer.len()
        }
    }

    /// Sizes of the faces of the plane drawing, the outer face first. Outer
    /// walks of all components are summed into the single outer face.
    pub fn face_sizes(&self) -> Vec<usize> {
        let outer: usize = self.component_outer.iter().map(|&f| self.faces[f].len()).sum();
        let mut sizes = vec![outer];
        for (i, f) in self.faces.iter().enumerate() {
            if !self.component_outer.contains(&i) {
                sizes.push(f.len());
            }
        }
        sizes
    }

    /// Every violated embedding condition; empty for a valid plane embedding.
    pub fn defects(&self) -> Vec<EmbeddingDefect> {
        let mut out = Vec::new();
        let comp = self.vertex_components();
        let k = comp.iter().copied().max().map_or(0, |x| x + 1);
        let mut nv = vec![0usize; k];
        let mut ne = vec![0usize; k];
        let mut nf = vec![0usize; k];
        for &c in &comp {
            nv[c] += 1;
        }
        for &(a, _) in &self.ends {
            ne[comp[a]] += 1;
        }
        for f in &self.faces {
            nf[comp[self.dart_tail(f[0])]] += 1;
        }
        for c in 0..k {
            let faces = nf[c].max(1);
            if nv[c] + faces != ne[c] + 2 {
                out.push(EmbeddingDefect::EulerViolation {
                    vertices: nv[c],
                    edges: ne[c],
                    faces,
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.defects().is_empty()
    }

    /// True if this embedding embeds exactly `g` (same vertex count and the
    /// same endpoints for every edge id, orientation ignored).
    pub fn embeds(&self, g: &Graph) -> bool {
        if g.vertex_count() != self.vertex_count() || g.edge_count() != self.edge_count() {
            return false;
        }
        g.edges().iter().zip(&self.ends).all(|(e, &(a, b))| {
            (e.tail == a && e.head == b) || (e.tail == b && e.head == a)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PlanarEmbedding {
        let ends: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let rotation = (0..n).map(|i| vec![(i + n - 1) % n, i]).collect();
        PlanarEmbedding::from_rotation(ends, rotation).unwrap()
    }

    #[test]
    fn cycle_has_two_faces() {
        let e = cycle(6);
        assert_eq!(e.faces().len(), 2);
        assert!(e.faces().iter().all(|f| f.len() == 6));
        assert!(e.is_valid());
        assert_eq!(e.face_count(), 2);
    }

    #[test]
    fn every_dart_on_one_face() {
        let e = cycle(5);
        let mut all: Vec<Dart> = e.faces().iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn bad_rotation_is_rejected() {
        let ends = vec![(0, 1), (1, 2)];
        let rotation = vec![vec![0], vec![0], vec![1]];
        assert_eq!(
            PlanarEmbedding::from_rotation(ends, rotation),
            Err(EmbeddingDefect::RotationMismatch(1))
        );
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // K4 with a rotation that puts it on the torus.
        let ends = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let rotation = vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]];
        let emb = PlanarEmbedding::from_rotation(ends, rotation).unwrap();
        // Either planar (4 faces) or toroidal (2 faces); this one is checked.
        let planar = emb.faces().len() == 4;
        assert_eq!(emb.is_valid(), planar);
    }

    #[test]
    fn disconnected_outer_faces_merge() {
        let ends = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        let rotation = vec![
            vec![2, 0],
            vec![0, 1],
            vec![1, 2],
            vec![5, 3],
            vec![3, 4],
            vec![4, 5],
        ];
        let emb = PlanarEmbedding::from_rotation(ends, rotation).unwrap();
        assert_eq!(emb.faces().len(), 4);
        assert_eq!(emb.face_count(), 3);
        assert_eq!(emb.face_sizes()[0], 6);
        assert!(emb.is_valid());
    }
}
