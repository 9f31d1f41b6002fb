"""Writes every connected graph on 1..8 vertices (up to isomorphism) in
graph6, each followed by networkx's planarity verdict (1 planar, 0 not).

Connected graphs on n+1 vertices are grown from connected graphs on n
vertices by adding a vertex joined to a nonempty subset: every connected
graph has a vertex whose removal keeps it connected.
"""

import sys
from itertools import combinations

import networkx as nx


def grow(graphs, n):
    seen = {}
    out = []
    for g in graphs:
        for k in range(1, n + 1):
            for nbrs in combinations(range(n), k):
                h = g.copy()
                h.add_node(n)
                h.add_edges_from((n, v) for v in nbrs)
                key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = seen.setdefault(key, [])
                if any(nx.is_isomorphic(h, o) for o in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main(path):
    level = [nx.empty_graph(1)]
    everything = list(level)
    for n in range(1, 8):
        level = grow(level, n)
        everything.extend(level)
    with open(path, "w") as f:
        f.write("# connected graphs on 1..8 vertices up to isomorphism: graph6 planar\n")
        for g in everything:
            g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
            f.write(f"{g6} {int(nx.check_planarity(g)[0])}\n")
    counts = {}
    for g in everything:
        counts[g.number_of_nodes()] = counts.get(g.number_of_nodes(), 0) + 1
    print(counts)


if __name__ == "__main__":
    main(sys.argv[1])
