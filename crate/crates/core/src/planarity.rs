//! Planarity testing and embedding of multigraphs.
//!
//! Parallel edges are collapsed before the left-right test and re-inserted
//! as consecutive rotation entries afterwards, which places every parallel
//! class inside a stack of digon faces.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::embedding::PlanarEmbedding;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::lr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub embedding: Option<PlanarEmbedding>,
    /// Edge ids of a non-planar subgraph, minimal under edge deletion.
    pub obstruction: Option<Vec<EdgeId>>,
}

/// Underlying simple graph: distinct unordered pairs in order of first
/// appearance, and for each of them the original edge ids (ascending).
struct Collapsed {
    pairs: Vec<(VertexId, VertexId)>,
    classes: Vec<Vec<EdgeId>>,
}

fn collapse(pairs: impl Iterator<Item = (VertexId, VertexId)>) -> Collapsed {
    let mut index: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    let mut out = Collapsed {
        pairs: Vec::new(),
        classes: Vec::new(),
    };
    for (e, (a, b)) in pairs.enumerate() {
        let key = if a < b { (a, b) } else { (b, a) };
        let k = *index.entry(key).or_insert_with(|| {
            out.pairs.push(key);
            out.classes.push(Vec::new());
            out.pairs.len() - 1
        });
        out.classes[k].push(e);
    }
    out
}

/// Planarity of a graph given as raw endpoint pairs. Parallel pairs are
/// allowed; loops are not.
pub fn is_planar_pairs(n: usize, pairs: &[(VertexId, VertexId)]) -> bool {
    let mut keys: Vec<(VertexId, VertexId)> = pairs
        .iter()
        .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    keys.sort_unstable();
    keys.dedup();
    lr::is_planar(n, &keys)
}

/// Planarity of a simple graph given as distinct, loop-free endpoint pairs.
pub fn is_planar_simple(n: usize, pairs: &[(VertexId, VertexId)]) -> bool {
    lr::is_planar(n, pairs)
}

pub fn is_planar(g: &Graph) -> bool {
    let mut keys = g.simple_keys();
    keys.sort_unstable();
    keys.dedup();
    lr::is_planar(g.vertex_count(), &keys)
}

/// Decides planarity and returns either an embedding or a non-planar edge
/// subset. Deterministic in the input's id order.
pub fn embed(g: &Graph) -> PlanarityVerdict {
    let n = g.vertex_count();
    let col = collapse(g.edges().iter().map(|e| (e.tail, e.head)));
    match lr::embed(n, &col.pairs) {
        Some(rot) => {
            let mut rotation = vec![Vec::new(); n];
            for (v, simple) in rot.iter().enumerate() {
                for &k in simple {
                    let class = &col.classes[k];
                    if col.pairs[k].0 == v {
                        rotation[v].extend(class.iter().copied());
                    } else {
                        rotation[v].extend(class.iter().rev().copied());
                    }
                }
            }
            let ends = g.edges().iter().map(|e| (e.tail, e.head)).collect();
            let emb = PlanarEmbedding::from_rotation(ends, rotation)
                .expect("left-right embedding covers every edge end");
            debug_assert!(emb.is_valid());
            PlanarityVerdict {
                planar: true,
                embedding: Some(emb),
                obstruction: None,
            }
        }
        None => PlanarityVerdict {
            planar: false,
            embedding: None,
            obstruction: Some(obstruction(n, &col)),
        },
    }
}

/// Greedy deletion: drop every edge whose removal keeps the graph
/// non-planar. The result is non-planar and minimal under edge deletion.
fn obstruction(n: usize, col: &Collapsed) -> Vec<EdgeId> {
    let mut keep = vec![true; col.pairs.len()];
    for i in 0..col.pairs.len() {
        keep[i] = false;
        let sub: Vec<_> = col
            .pairs
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(&p, _)| p)
            .collect();
        if lr::is_planar(n, &sub) {
            keep[i] = true;
        }
    }
    let mut out: Vec<EdgeId> = (0..col.pairs.len())
        .filter(|&i| keep[i])
        .map(|i| col.classes[i][0])
        .collect();
    out.sort_unstable();
    out
}

/// `(f, f_c)`: number of faces and number of faces of size at most `c`.
pub fn face_census(emb: &PlanarEmbedding, c: usize) -> (usize, usize) {
    let sizes = emb.face_sizes();
    let fc = sizes.iter().filter(|&&s| s <= c).count();
    (sizes.len(), fc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dumbbell::{make_dumbbell, DumbbellSpec};

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(&pairs).unwrap()
    }

    fn k33() -> Graph {
        let mut g = Graph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&k33()));
        let v = embed(&k33());
        assert!(!v.planar);
        assert_eq!(v.obstruction.unwrap().len(), 9);
        let v = embed(&complete(5));
        assert_eq!(v.obstruction.unwrap().len(), 10);
    }

    #[test]
    fn cycle_embedding() {
        let v = embed(&cycle(6));
        let emb = v.embedding.unwrap();
        assert_eq!(emb.faces().len(), 2);
        assert_eq!(face_census(&emb, 6), (2, 2));
        assert_eq!(face_census(&emb, 5), (2, 0));
    }

    #[test]
    fn dumbbell_faces() {
        let g = make_dumbbell(DumbbellSpec::new(6, 6, 0).unwrap()).unwrap();
        let emb = embed(&g).embedding.unwrap();
        assert_eq!(emb.face_count(), 3);
        assert_eq!(face_census(&emb, 6), (3, 2));
        assert_eq!(emb.face_sizes()[0], 12);
    }

    #[test]
    fn parallel_edges_make_digons() {
        let g = Graph::multigraph_with_edges(3, &[(0, 1), (1, 2), (2, 0), (0, 1), (1, 0)]).unwrap();
        let emb = embed(&g).embedding.unwrap();
        assert!(emb.is_valid());
        assert_eq!(emb.faces().len(), 4);
        assert_eq!(emb.faces().iter().filter(|f| f.len() == 2).count(), 2);
    }

    #[test]
    fn disconnected_graph_embeds() {
        let g = Graph::from_edges(&[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let emb = embed(&g).embedding.unwrap();
        assert!(emb.is_valid());
        assert_eq!(emb.face_count(), 3);
    }
}
