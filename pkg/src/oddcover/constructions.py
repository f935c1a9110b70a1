"""Explicit odd cover constructions.

Every function returns an :class:`~oddcover.cover.OddCover`; none of them
certify their own output; check a result against the graph it is meant to
cover with :func:`oddcover.cover.verify`.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .cover import Biclique, OddCover, is_perfect
from .gf import GFContext, gf_new, inner, nonzero_vectors, projective_normals
from .graph import Graph, complete_graph, disjoint_union


# -- disjoint copies and odd cliques ------------------------------------------


def double_cover(h: Graph) -> OddCover:
    """Odd cover of ``h + h`` with ``|V(h)|`` bicliques.

    The two copies sit on ``v_i = i`` and ``w_i = k + i``.  Biclique ``i`` has
    ``X_i = {v_i, w_i}``; vertices are added one at a time, the new vertex
    ``v_j`` joining ``Y_i`` for each earlier neighbour ``v_i`` and ``Y_j``
    collecting the copies ``w_i`` of those neighbours.
    """
    k = h.n
    xs = [{i, k + i} for i in range(k)]
    ys: list[set[int]] = [set() for _ in range(k)]
    for j in range(k):
        for i in range(j):
            if h.has_edge(i, j):
                ys[i].add(j)
                ys[j].add(k + i)
    return OddCover(2 * k, tuple(Biclique(x, y) for x, y in zip(xs, ys)))


def odd_clique_cover(k: int) -> OddCover:
    """``k + 1`` bicliques covering ``K_{2k+1}``.

    Vertex 0 is the apex ``u``, ``1..k`` are the ``v``'s and ``k+1..2k`` the
    ``w``'s.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    base = double_cover(complete_graph(k)).relabel([v + 1 for v in range(2 * k)], 2 * k + 1)
    bicliques = [Biclique(b.x, b.y | {0}) for b in base]
    bicliques.append(Biclique(range(1, k + 1), range(k + 1, 2 * k + 1)))
    return OddCover(2 * k + 1, tuple(bicliques))


def clique_union_layout(ms: Sequence[int]) -> list[tuple[int, list[int], list[int]]]:
    """Vertex roles ``(u_i, V_i, W_i)`` for the disjoint union of ``K_{2m_i+1}``.

    Block ``i`` is contiguous: its apex first, then the ``v``'s, then the
    ``w``'s.
    """
    layout = []
    off = 0
    for m in ms:
        layout.append((off, list(range(off + 1, off + 1 + m)), list(range(off + 1 + m, off + 1 + 2 * m))))
        off += 2 * m + 1
    return layout


def odd_clique_union_cover(ms: Sequence[int]) -> OddCover:
    """``sum(ms) + 1`` bicliques covering ``K_{2m_1+1} + ... + K_{2m_j+1}``."""
    if not ms:
        raise ValueError("need at least one clique")
    if any(m < 1 for m in ms):
        raise ValueError("every m_i must be at least 1")
    n = sum(2 * m + 1 for m in ms)
    layout = clique_union_layout(ms)
    total = sum(ms)
    # double_cover of K_{m_1} + ... + K_{m_j} puts the v-copy on 0..total-1
    # and the w-copy on total..2*total-1, block by block.
    vs = [v for _, V, _ in layout for v in V]
    ws = [w for _, _, W in layout for w in W]
    base = double_cover(disjoint_union([complete_graph(m) for m in ms])).relabel(vs + ws, n)
    all_v = set(vs)
    bicliques = []
    idx = 0
    for u, V, _ in layout:
        others = all_v - set(V)
        for _ in V:
            b = base.bicliques[idx]
            bicliques.append(Biclique(b.x, b.y | {u} | others))
            idx += 1
    bicliques.append(Biclique(vs, ws))
    return OddCover(n, tuple(bicliques))


# -- cycles -------------------------------------------------------------------


def even_cycle_cover(m: int) -> OddCover:
    """Perfect odd cover of ``C_{2m}`` by ``m - 1`` copies of ``K_{2,2}``.

    Every ``K_{2,2}`` shares the hub vertex ``2m - 1``; consecutive hub edges
    appear twice and cancel.
    """
    if m < 2:
        raise ValueError("even cycles need m >= 2")
    hub = 2 * m - 1
    return OddCover(2 * m, tuple(Biclique({2 * i - 2, 2 * i}, {2 * i - 1, hub}) for i in range(1, m)))


def _extend_cycle(bicliques: list[Biclique], cycle: list[int], a: int, b: int) -> None:
    # Replace the closing edge (last, first) by the path last - a - b - first.
    bicliques.append(Biclique({cycle[-1], b}, {cycle[0], a}))
    cycle.extend([a, b])


def cycle_extension(c: OddCover, target: int) -> OddCover:
    """Grow an odd cover of ``C_{2n+1}`` into one of ``C_target``.

    ``c`` must cover the cycle ``0, 1, ..., 2n`` in that order.  Each step
    appends a ``K_{2,2}`` that swaps the closing edge for a path through two
    new vertices, so the vertices of ``C_target`` stay in cycle order.
    """
    length = c.n
    if length % 2 == 0 or target % 2 == 0:
        raise ValueError("cycle_extension works on odd cycles only")
    if target < length:
        raise ValueError(f"target {target} is shorter than the cycle {length}")
    bicliques = list(c.bicliques)
    cycle = list(range(length))
    while len(cycle) < target:
        _extend_cycle(bicliques, cycle, len(cycle), len(cycle) + 1)
    return OddCover(target, tuple(bicliques))


def cycle_union_cover(odd_ns: Sequence[int], even_ms: Sequence[int] = ()) -> OddCover:
    """Odd cover of ``C_{2n_1+1} + ... + C_{2n_t+1} + C_{2m_1} + ... + C_{2m_l}``.

    Uses ``sum(n) + sum(m) - l + 1`` bicliques.  The cycles are laid out in
    argument order, odd cycles first, each on a contiguous block in cycle
    order.
    """
    if not odd_ns:
        raise ValueError("need at least one odd cycle; use even_cycle_cover for even ones")
    if any(n < 1 for n in odd_ns) or any(m < 2 for m in even_ms):
        raise ValueError("odd cycles need n >= 1 and even cycles m >= 2")
    sizes = [2 * n + 1 for n in odd_ns] + [2 * m for m in even_ms]
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    total = sum(sizes)

    # t disjoint triangles = t K_3; their blocks are (u, v, w) -> first 3
    # vertices of each odd cycle block.
    tri = odd_clique_union_cover([1] * len(odd_ns))
    bicliques = list(tri.relabel([offsets[i // 3] + i % 3 for i in range(3 * len(odd_ns))], total))
    for n, off in zip(odd_ns, offsets):
        cycle = [off, off + 1, off + 2]
        while len(cycle) < 2 * n + 1:
            nxt = off + len(cycle)
            _extend_cycle(bicliques, cycle, nxt, nxt + 1)
    for m, off in zip(even_ms, offsets[len(odd_ns):]):
        bicliques.extend(even_cycle_cover(m).relabel([off + v for v in range(2 * m)], total))
    return OddCover(total, tuple(bicliques))


# -- pairs constructions -------------------------------------------------------


@dataclass(frozen=True)
class SignedPairsMatrix:
    """Square matrix over {-1, 0, +1}; row = vertex pair, column = biclique."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        for r in self.entries:
            if len(r) != len(self.entries):
                raise ValueError("pairs matrix must be square")
            if any(e not in (-1, 0, 1) for e in r):
                raise ValueError("entries must be -1, 0 or 1")

    @property
    def size(self) -> int:
        return len(self.entries)


def pairs_conditions(m: SignedPairsMatrix) -> list[str]:
    """Failures of the three pairs-construction conditions for ``K_{2 size}``.

    Returns an empty list when every row has odd support and every two rows
    have an odd number of columns with opposite nonzero signs and an odd
    number with equal nonzero signs.
    """
    problems = []
    rows = m.entries
    for i, r in enumerate(rows):
        if sum(1 for e in r if e) % 2 == 0:
            problems.append(f"row {i} has even support")
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            same = sum(1 for a, b in zip(rows[i], rows[j]) if a and a == b)
            opp = sum(1 for a, b in zip(rows[i], rows[j]) if a and a == -b)
            if opp % 2 == 0:
                problems.append(f"rows {i},{j}: even number of opposite signs")
            if same % 2 == 0:
                problems.append(f"rows {i},{j}: even number of equal signs")
    return problems


def pairs_to_cover(m: SignedPairsMatrix) -> OddCover:
    """Cover on ``2 * size`` vertices; row ``i`` is the pair ``(2i, 2i+1)``.

    Entry ``+1`` in column ``j`` puts ``2i`` in ``X_j`` and ``2i+1`` in
    ``Y_j``; ``-1`` swaps them; ``0`` leaves both out.
    """
    xs: list[set[int]] = [set() for _ in range(m.size)]
    ys: list[set[int]] = [set() for _ in range(m.size)]
    for i, row in enumerate(m.entries):
        for j, e in enumerate(row):
            if e == 1:
                xs[j].add(2 * i)
                ys[j].add(2 * i + 1)
            elif e == -1:
                xs[j].add(2 * i + 1)
                ys[j].add(2 * i)
    return OddCover(2 * m.size, tuple(Biclique(x, y) for x, y in zip(xs, ys)))


def canonical_pairing(n: int) -> list[tuple[int, int]]:
    return [(2 * i, 2 * i + 1) for i in range(n // 2)]


def alternating_block(s: int) -> list[list[int]]:
    """The ``s x s`` block ``C``: zero diagonal, signs alternating along each row.

    With 1-based ``i, j``: ``+1`` when ``j > i`` and ``j - i`` is odd or
    ``j < i`` and ``j - i`` is even; ``-1`` in the remaining off-diagonal
    cells.
    """
    c = [[0] * s for _ in range(s)]
    for i in range(1, s + 1):
        for j in range(1, s + 1):
            if i == j:
                continue
            odd = (j - i) % 2 == 1
            if (j > i) == odd:
                c[i - 1][j - 1] = 1
            else:
                c[i - 1][j - 1] = -1
    return c


def _three_block(s: int) -> SignedPairsMatrix:
    a = [[1] * s for _ in range(s)]
    b = [[0] * s for _ in range(s)]
    c = alternating_block(s)
    layout = [[a, c, b], [c, b, a], [b, a, c]]
    rows = []
    for block_row in layout:
        for r in range(s):
            rows.append(tuple(x for blk in block_row for x in blk[r]))
    return SignedPairsMatrix(tuple(rows))


def pairs_18mod24(n: int) -> SignedPairsMatrix:
    """Pairs matrix of a perfect odd cover of ``K_n`` for ``n = 18 (mod 24)``."""
    if n % 24 != 18:
        raise ValueError(f"n must be 18 mod 24, got {n}")
    return _three_block(n // 6)


def pairs_6mod24(n: int) -> SignedPairsMatrix:
    """Same block recipe for ``n = 6 (mod 24)``; it covers ``3 K_{n/3}`` perfectly."""
    if n % 24 != 6 or n < 30:
        raise ValueError(f"n must be 6 mod 24 and at least 30, got {n}")
    return _three_block(n // 6)


# -- finite field constructions -----------------------------------------------


def _hyperplane_cover(ctx: GFContext, k: int, base: OddCover) -> OddCover:
    vertices = nonzero_vectors(ctx, k)
    bicliques = []
    for a in projective_normals(ctx, k):
        # label of element e is e - 1 (nonzero elements in integer order)
        label = [inner(v, a) - 1 for v in vertices]
        for b in base:
            bicliques.append(
                Biclique(
                    (i for i, t in enumerate(label) if t in b.x),
                    (i for i, t in enumerate(label) if t in b.y),
                )
            )
    return OddCover(len(vertices), tuple(bicliques))


def tomon_cover(k: int) -> OddCover:
    """Perfect odd cover of ``K_{3^k - 1}`` by ``(3^k - 1) / 2`` bicliques.

    Vertices are the nonzero vectors of F_3^k in lexicographic order; each
    projective normal ``a`` gives the biclique between the hyperplanes
    ``<v, a> = 1`` and ``<v, a> = 2``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    ctx = gf_new(3, 1)
    vertices = nonzero_vectors(ctx, k)
    bicliques = []
    for a in projective_normals(ctx, k):
        side = [inner(v, a) for v in vertices]
        bicliques.append(
            Biclique((i for i, t in enumerate(side) if t == 1), (i for i, t in enumerate(side) if t == 2))
        )
    return OddCover(len(vertices), tuple(bicliques))


def field_lift_cover(ctx: GFContext, k: int, base: OddCover) -> OddCover:
    """Lift a perfect odd cover of ``K_{q-1}`` to one of ``K_{q^k - 1}``.

    Base vertex ``t`` stands for the nonzero field element with label ``t``
    (integer order).  For every projective normal ``a`` and every base
    biclique ``(X, Y)``, vertex ``v`` joins ``X'`` when ``<v, a>`` has a label
    in ``X`` and ``Y'`` when it has one in ``Y``.

    Raises:
        ValueError: if ``base`` is not a perfect odd cover of ``K_{q-1}``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if base.n != ctx.q - 1 or not is_perfect(complete_graph(ctx.q - 1), base):
        raise ValueError(f"base must be a perfect odd cover of K_{ctx.q - 1}")
    return _hyperplane_cover(ctx, k, base)


def same_type_classes(c: OddCover) -> list[list[int]]:
    """Vertices grouped by the set of bicliques whose support contains them."""
    sig: dict[int, list[int]] = {}
    for v in range(c.n):
        key = sum(1 << i for i, b in enumerate(c) if v in b.support)
        sig.setdefault(key, []).append(v)
    return sorted(sig.values())


__all__ = [
    "SignedPairsMatrix",
    "alternating_block",
    "canonical_pairing",
    "cycle_extension",
    "cycle_union_cover",
    "double_cover",
    "even_cycle_cover",
    "field_lift_cover",
    "odd_clique_cover",
    "odd_clique_union_cover",
    "pairs_18mod24",
    "pairs_6mod24",
    "pairs_conditions",
    "pairs_to_cover",
    "same_type_classes",
    "tomon_cover",
]
