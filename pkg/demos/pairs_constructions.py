"""
Pairs constructions for even cliques
====================================

A signed matrix whose rows are vertex pairs and whose columns are bicliques.
The block recipe works for n = 18 (mod 24); the search shows which small n
admit one at all.
"""

import time

from oddcover.constructions import canonical_pairing, pairs_18mod24, pairs_conditions, pairs_to_cover
from oddcover.cover import is_perfect
from oddcover.graph import complete_graph
from oddcover.properties import even_clique_props, same_type_check
from oddcover.search import pairs_search

m = pairs_18mod24(18)
for row in m.entries:
    print(" ".join(f"{e:+d}" if e else " 0" for e in row))
print("row conditions hold:", not pairs_conditions(m))

cover = pairs_to_cover(m)
print("perfect cover of K_18:", is_perfect(complete_graph(18), cover))
print("paired vertices share supports:", same_type_check(cover, canonical_pairing(18)))
print("\n".join(even_clique_props(cover, 18, sample=2000).lines()))

# which n <= 18 have a pairs construction at all?
for n in range(2, 20, 2):
    t = time.monotonic()
    res = pairs_search(n, budget=60)
    print(f"n={n:2d}: {res.status:7s} {res.nodes:6d} nodes {time.monotonic() - t:.2f}s")
