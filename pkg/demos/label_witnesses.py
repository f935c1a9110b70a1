"""
Graphs that absorb a clique for free
====================================

Label each vertex with a string over {0, 1, e}; coordinate j says whether the
vertex sits in X_j, Y_j or neither.  Two labelled vertices are adjacent when
the count of 0/1 clashes is odd.  These labels give graphs H with
b2(H) = b2(H + K_2) and b2(H) = b2(H + K_3).
"""

from oddcover.cover import lower_bound, verify
from oddcover.graph import complete_graph, disjoint_union
from oddcover.search import has_cover_of_size, labeling_to_cover, labels_graph

h1 = "e00e e11e 1101 1011 e0ee 11e1 1e11 ee0e 0111 e110".split()
h2 = "00eee 0e0ee 0e101 01e01 011e0 1e1ee 1e001 e1111 e00ee e11ee e0011 e0101 e1001".split()

for labels, extra, size in ((h1, ["000e", "1000"], 2), (h2, ["00000", "0001e", "11111"], 3)):
    h = labels_graph(labels)
    k = len(labels[0])
    print(f"H: {h.n} vertices, {h.num_edges} edges, lower bound {lower_bound(h).value}")
    res = has_cover_of_size(h, k - 1, budget=300)
    print(f"  cover with {k - 1} bicliques: {res.status} after {res.nodes} nodes")
    both = labels_graph(labels + extra)
    print(f"  labels + K_{size} induce H + K_{size}:", both == disjoint_union([h, complete_graph(size)]))
    print(f"  so {k} bicliques cover H + K_{size}:", verify(both, labeling_to_cover(labels + extra)).valid)
