//! Planarity against an exhaustive Kuratowski-minor search on every
//! connected graph with at most 8 vertices, and against the networkx
//! verdicts stored next to each graph in the fixture.

use thrackle_core::planarity::{embed, is_planar};
use thrackle_core::Graph;

const FIXTURE: &str = include_str!("fixtures/connected_le8.g6");

fn parse_graph6(s: &str) -> Graph {
    let bytes: Vec<u8> = s.bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    let bits = bytes[1..].iter().flat_map(|&b| (0..6).rev().map(move |i| (b >> i) & 1 == 1));
    let mut pairs = Vec::new();
    let mut it = bits;
    for j in 1..n {
        for i in 0..j {
            if it.next().unwrap() {
                pairs.push((i, j));
            }
        }
    }
    Graph::with_edges(n, &pairs).unwrap()
}

/// Decides K5- and K3,3-minor containment by searching for pairwise
/// disjoint connected branch sets with the required adjacencies.
struct MinorSearch {
    /// Connected vertex sets as bitmasks, ascending.
    sets: Vec<u32>,
    /// Closed neighbourhood mask of each set in `sets`.
    reach: Vec<u32>,
}

impl MinorSearch {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0, |m, w| m | 1 << w)).collect();
        let mut sets = Vec::new();
        let mut reach = Vec::new();
        for mask in 1u32..(1 << n) {
            let start = mask.trailing_zeros();
            let mut seen = 1u32 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros();
                frontier &= frontier - 1;
                let next = adj[v as usize] & mask & !seen;
                seen |= next;
                frontier |= next;
            }
            if seen == mask {
                sets.push(mask);
                let mut r = 0;
                for v in 0..n {
                    if mask >> v & 1 == 1 {
                        r |= adj[v];
                    }
                }
                reach.push(r);
            }
        }
        MinorSearch { sets, reach }
    }

    fn touches(&self, a: usize, b: usize) -> bool {
        self.reach[a] & self.sets[b] != 0
    }

    fn k5(&self, chosen: &mut Vec<usize>, from: usize, used: u32) -> bool {
        if chosen.len() == 5 {
            return true;
        }
        for i in from..self.sets.len() {
            if self.sets[i] & used != 0 || !chosen.iter().all(|&c| self.touches(c, i)) {
                continue;
            }
            chosen.push(i);
            if self.k5(chosen, i + 1, used | self.sets[i]) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Three disjoint sets in ascending order for one side, then three for
    /// the other side, each touching all of the first three.
    fn k33(&self, side: &mut Vec<usize>, from: usize, used: u32) -> bool {
        if side.len() == 3 {
            let mut other = Vec::new();
            return self.k33_other(side, &mut other, 0, used);
        }
        for i in from..self.sets.len() {
            if self.sets[i] & used != 0 {
                continue;
            }
            side.push(i);
            if self.k33(side, i + 1, used | self.sets[i]) {
                return true;
            }
            side.pop();
        }
        false
    }

    fn k33_other(&self, side: &[usize], other: &mut Vec<usize>, from: usize, used: u32) -> bool {
        if other.len() == 3 {
            return true;
        }
        for i in from..self.sets.len() {
            if self.sets[i] & used != 0 || !side.iter().all(|&a| self.touches(a, i)) {
                continue;
            }
            other.push(i);
            if self.k33_other(side, other, i + 1, used | self.sets[i]) {
                return true;
            }
            other.pop();
        }
        false
    }

    fn nonplanar(&self) -> bool {
        self.k5(&mut Vec::new(), 0, 0) || self.k33(&mut Vec::new(), 0, 0)
    }
}

fn brute_force_planar(g: &Graph) -> bool {
    !MinorSearch::new(g).nonplanar()
}

#[test]
fn agrees_with_minor_search_on_all_small_connected_graphs() {
    let mut counts = [0usize; 9];
    let mut nonplanar = 0;
    for line in FIXTURE.lines().filter(|l| !l.starts_with('#')) {
        let (g6, verdict) = line.split_once(' ').unwrap();
        let g = parse_graph6(g6);
        counts[g.vertex_count()] += 1;
        let expected = brute_force_planar(&g);
        assert_eq!(expected, verdict == "1", "fixture disagrees with minor search on {g6}");
        assert_eq!(is_planar(&g), expected, "{g6}");
        if !expected {
            nonplanar += 1;
        }
    }
    assert_eq!(counts, [0, 1, 1, 2, 6, 21, 112, 853, 11117]);
    assert_eq!(nonplanar, 5364);
}

#[test]
fn embeddings_of_small_planar_graphs_are_plane() {
    for line in FIXTURE.lines().filter(|l| !l.starts_with('#')).step_by(7) {
        let (g6, verdict) = line.split_once(' ').unwrap();
        let g = parse_graph6(g6);
        let v = embed(&g);
        assert_eq!(v.embedding.is_some(), verdict == "1", "{g6}");
        if let Some(emb) = v.embedding {
            assert!(emb.embeds(&g) && emb.is_valid(), "{g6}");
            let faces = emb.face_count();
            assert_eq!(g.vertex_count() + faces, g.edge_count() + 2, "{g6}");
        }
    }
}

#[test]
fn kuratowski_graphs() {
    let k5: Vec<_> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let k33: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    for pairs in [&k5, &k33] {
        let g = Graph::from_edges(pairs).unwrap();
        assert!(!is_planar(&g));
        assert!(!brute_force_planar(&g));
        for e in 0..g.edge_count() {
            let keep: Vec<_> = (0..g.edge_count()).filter(|&f| f != e).collect();
            let h = g.edge_subgraph(&keep);
            assert!(is_planar(&h));
            assert!(brute_force_planar(&h));
        }
    }
}
