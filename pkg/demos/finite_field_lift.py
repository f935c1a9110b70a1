"""
Hyperplane covers over finite fields
====================================

Nonzero vectors of F_3^k, one biclique per direction, give a perfect cover of
K_{3^k - 1}.  Replacing F_3 by F_9 and the single-edge base by a cover of
K_8 lifts the idea to K_80.
"""

import itertools
import time

from oddcover.constructions import field_lift_cover, tomon_cover
from oddcover.cover import is_perfect
from oddcover.gf import gf_new, projective_normals
from oddcover.graph import complete_graph
from oddcover.properties import perfect_cover_checks

for k in (1, 2, 3):
    c = tomon_cover(k)
    print(f"K_{3**k - 1}: {len(c)} bicliques, perfect={is_perfect(complete_graph(3**k - 1), c)}")

f9 = gf_new(3, 2)
print("F_9 modulus coefficients (low to high):", f9.irreducible)
print("directions in F_9^2:", len(projective_normals(f9, 2)))

# relabel the K_8 cover so vertex (a, b) of F_3^2 becomes element a + b x of F_9
vectors = [v for v in itertools.product(range(3), repeat=2) if any(v)]
base = tomon_cover(2).relabel([f9.element(v) - 1 for v in vectors], 8)

t = time.monotonic()
lifted = field_lift_cover(f9, 2, base)
k80 = complete_graph(80)
print(f"lifted: {len(lifted)} bicliques, perfect={is_perfect(k80, lifted)} ({time.monotonic() - t:.2f}s)")
for report in perfect_cover_checks(k80, lifted):
    print("\n".join(report.lines()))
