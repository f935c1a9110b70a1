"""Simple undirected graphs stored as adjacency bitsets.

Vertex ``i`` owns row ``adj[i]``, an integer whose set bits are the open
neighbourhood ``N(i)``.  Vertex sets passed around internally are integer
masks; the public functions accept and return ordinary Python collections.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .f2core import F2Matrix, bit_indices, kernel_basis, mask_of, rank

DEFAULT_CORE_CAP = 20


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for i, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i} references a vertex >= {self.n}")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bit_indices(row):
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return bit_indices(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bit_indices(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def adjacency(self) -> F2Matrix:
        return F2Matrix(self.n, self.n, self.adj)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            rows.append(mask_of(pos[u] for u in bit_indices(self.adj[v]) if u in pos))
        return Graph(len(vs), tuple(rows))

    def induced_edge_count(self, s: int) -> int:
        """Number of edges of ``G[S]`` for the vertex mask ``s``."""
        return sum((self.adj[v] & s).bit_count() for v in bit_indices(s)) // 2

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full ^ r ^ (1 << i) for i, r in enumerate(self.adj)))

    def padded(self, n: int) -> Graph:
        """The same graph on a larger universe; new vertices are isolated."""
        if n < self.n:
            raise ValueError(f"cannot pad {self.n} vertices down to {n}")
        return Graph(n, self.adj + (0,) * (n - self.n))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the listed edges.

    Raises:
        ValueError: on loops, repeated edges, or endpoints outside ``0..n-1``.
    """
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if (rows[u] >> v) & 1:
            raise ValueError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build(kind: str, n: int, edges: Iterable[tuple[int, int]] | None = None) -> Graph:
    """Build a named graph: ``complete``, ``cycle``, ``empty`` or ``edge_list``."""
    if kind == "complete":
        return complete_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "empty":
        return empty_graph(n)
    if kind == "edge_list":
        return from_edges(n, edges or [])
    raise ValueError(f"unknown graph kind {kind!r}")


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Concatenate vertex blocks in input order with no edges between blocks."""
    rows: list[int] = []
    offset = 0
    for g in gs:
        rows.extend(r << offset for r in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def sym_diff(g: Graph, h: Graph) -> Graph:
    """Graph whose edge set is the symmetric difference of ``g`` and ``h``.

    Vertices are aligned by index; the smaller graph is padded with isolated
    vertices.
    """
    n = max(g.n, h.n)
    g, h = g.padded(n), h.padded(n)
    return Graph(n, tuple(a ^ b for a, b in zip(g.adj, h.adj)))


class EvenCores(NamedTuple):
    """Even cores of a graph as sorted vertex tuples.

    When ``truncated`` is true the kernel was too large to enumerate and
    ``sets`` holds only the kernel basis.
    """

    sets: list[tuple[int, ...]]
    truncated: bool
    dimension: int


def kernel_masks(g: Graph) -> list[int]:
    """Kernel basis of the adjacency matrix as vertex masks."""
    return kernel_basis(g.adjacency())


def is_even_core(g: Graph, s: int) -> bool:
    """Direct parity count: every vertex has an even number of neighbours in ``s``."""
    return s != 0 and all((row & s).bit_count() % 2 == 0 for row in g.adj)


def even_cores(g: Graph, cap: int = DEFAULT_CORE_CAP) -> EvenCores:
    """All even cores of ``g``, or just a kernel basis when the kernel is too big.

    An even core is a nonempty vertex set in which every vertex of ``g`` has
    an even number of neighbours; these are exactly the nonzero vectors of the
    kernel of the adjacency matrix.  With kernel dimension ``d <= cap`` all
    ``2**d - 1`` sets are listed in Gray-code order.
    """
    basis = kernel_masks(g)
    d = len(basis)
    if d > cap:
        return EvenCores([tuple(bit_indices(b)) for b in basis], True, d)
    out = []
    cur = 0
    for i in range(1, 1 << d):
        # Gray code: flip the basis vector indexed by the lowest set bit of i.
        cur ^= basis[(i & -i).bit_length() - 1]
        out.append(tuple(bit_indices(cur)))
    return EvenCores(out, False, d)


def closed_twin_matching(g: Graph) -> list[tuple[int, int]]:
    """Greedy matching of adjacent twins (``N[u] == N[v]``), lowest indices first."""
    used = 0
    pairs = []
    closed = [row | (1 << v) for v, row in enumerate(g.adj)]
    for u in range(g.n):
        if (used >> u) & 1:
            continue
        for v in bit_indices(g.adj[u] >> (u + 1) << (u + 1)):
            if not (used >> v) & 1 and closed[u] == closed[v]:
                pairs.append((u, v))
                used |= (1 << u) | (1 << v)
                break
    return pairs


def rank_via_twins(g: Graph) -> int:
    """GF(2) rank of the adjacency matrix using adjacent-twin reductions.

    Each adjacent-twin pair in a matching contributes 2 to the rank, and the
    rest of the graph is handled recursively, so
    ``rank(G) = 2 |M| + rank(G - V(M))``.  Once no twins remain the remainder
    is eliminated directly.
    """
    total = 0
    while True:
        pairs = closed_twin_matching(g)
        if not pairs:
            return total + rank(g.adjacency())
        total += 2 * len(pairs)
        matched = {v for p in pairs for v in p}
        g = g.induced(v for v in range(g.n) if v not in matched)


# -- edge-list text format -------------------------------------------------


class EdgeListError(ValueError):
    """Malformed edge-list text; the message carries the line number."""


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise EdgeListError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise EdgeListError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
            if n < 0:
                raise EdgeListError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u == v:
            raise EdgeListError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: vertex out of range 0..{n - 1} in {raw!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise EdgeListError("line 1: missing header 'n <count>'")
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
