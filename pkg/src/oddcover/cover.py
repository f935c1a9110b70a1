"""Bicliques, odd covers, and their certification.

A biclique ``(X, Y)`` covers every pair with one end in ``X`` and the other in
``Y``.  A collection of bicliques is an odd cover of ``G`` when every edge is
covered an odd number of times and every non-edge an even number of times.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

from .f2core import F2Matrix, bit_indices, direct_sum_swaps, mask_of, rank
from .graph import DEFAULT_CORE_CAP, Graph, even_cores, kernel_masks


@dataclass(frozen=True)
class Biclique:
    """Complete bipartite graph between two disjoint vertex sets.

    Either side may be empty, in which case the biclique covers nothing.
    """

    x: frozenset[int]
    y: frozenset[int]

    def __init__(self, x: Iterable[int], y: Iterable[int]) -> None:
        object.__setattr__(self, "x", frozenset(x))
        object.__setattr__(self, "y", frozenset(y))
        both = self.x & self.y
        if both:
            raise ValueError(f"biclique sides overlap on {sorted(both)}")

    @property
    def support(self) -> frozenset[int]:
        return self.x | self.y

    def covers(self, u: int, v: int) -> bool:
        return (u in self.x and v in self.y) or (u in self.y and v in self.x)

    def relabel(self, mapping: Mapping[int, int] | Sequence[int]) -> Biclique:
        return Biclique((mapping[v] for v in self.x), (mapping[v] for v in self.y))

    def __repr__(self) -> str:
        return f"Biclique({sorted(self.x)}, {sorted(self.y)})"


@dataclass(frozen=True)
class OddCover:
    """Ordered list of bicliques on the host vertex set ``0..n-1``."""

    n: int
    bicliques: tuple[Biclique, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "bicliques", tuple(self.bicliques))
        for i, b in enumerate(self.bicliques):
            for v in b.support:
                if not 0 <= v < self.n:
                    raise ValueError(f"biclique {i} uses vertex {v} outside 0..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.bicliques)

    def __iter__(self):
        return iter(self.bicliques)

    def relabel(self, mapping: Mapping[int, int] | Sequence[int], n: int | None = None) -> OddCover:
        """Rename vertices through ``mapping`` onto a host of size ``n``."""
        return OddCover(self.n if n is None else n, tuple(b.relabel(mapping) for b in self.bicliques))

    def extended(self, more: Iterable[Biclique], n: int | None = None) -> OddCover:
        return OddCover(self.n if n is None else n, self.bicliques + tuple(more))

    def covered_graph(self) -> Graph:
        """The graph this collection covers oddly (mod-2 sum of the bicliques)."""
        rows = [0] * self.n
        for b in self.bicliques:
            xm, ym = mask_of(b.x), mask_of(b.y)
            for v in b.x:
                rows[v] ^= ym
            for v in b.y:
                rows[v] ^= xm
        return Graph(self.n, tuple(rows))


def coverage_count(c: OddCover, u: int, v: int) -> int:
    """Number of bicliques in ``c`` that split ``u`` and ``v`` across their sides."""
    if u == v:
        raise ValueError("coverage of a vertex with itself is undefined")
    for w in (u, v):
        if not 0 <= w < c.n:
            raise ValueError(f"vertex {w} outside 0..{c.n - 1}")
    return sum(1 for b in c.bicliques if b.covers(u, v))


class Violation(NamedTuple):
    pair: tuple[int, int]
    parity: str  # observed parity: "odd" or "even"


class VerifyReport(NamedTuple):
    valid: bool
    violations: list[Violation]


def _check_sizes(g: Graph, c: OddCover) -> None:
    if g.n != c.n:
        raise ValueError(f"cover is on {c.n} vertices but graph has {g.n}")


def verify(g: Graph, c: OddCover) -> VerifyReport:
    """Check every vertex pair's coverage parity against ``g``.

    Counts are taken pair by pair with :func:`coverage_count`, so this shares
    no code with the matrix identity in :func:`matrix_identity_holds`.
    """
    _check_sizes(g, c)
    violations = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            odd = coverage_count(c, u, v) % 2 == 1
            if odd != g.has_edge(u, v):
                violations.append(Violation((u, v), "odd" if odd else "even"))
    return VerifyReport(not violations, violations)


def is_valid(g: Graph, c: OddCover) -> bool:
    """Fast bitset form of ``verify(g, c).valid``."""
    _check_sizes(g, c)
    return c.covered_graph().adj == g.adj


def incidence_matrix(c: OddCover) -> F2Matrix:
    """``n x 2k`` vertex/partite-set incidence, columns ``X1, Y1, ..., Xk, Yk``."""
    rows = [0] * c.n
    for i, b in enumerate(c.bicliques):
        for v in b.x:
            rows[v] |= 1 << (2 * i)
        for v in b.y:
            rows[v] |= 1 << (2 * i + 1)
    return F2Matrix(c.n, 2 * len(c.bicliques), tuple(rows))


def matrix_identity_holds(g: Graph, c: OddCover) -> bool:
    """Test ``A_G = M A_k M^T`` over GF(2) for the incidence matrix ``M``."""
    _check_sizes(g, c)
    m = incidence_matrix(c)
    product = m @ direct_sum_swaps(len(c)) @ m.transpose()
    return product.rows == g.adj


def is_perfect(g: Graph, c: OddCover) -> bool:
    """Valid odd cover whose size meets the rank bound ``r2(G)/2``."""
    return is_valid(g, c) and 2 * len(c) == rank(g.adjacency())


class LowerBound(NamedTuple):
    """Certified lower bound on the odd cover number.

    ``value`` is ``rank/2`` plus one when a perfect odd cover is ruled out.
    ``reason`` says how: ``"even core"`` (``obstruction`` is an even core
    whose induced subgraph has an odd number of edges), ``"odd cliques"``
    (every nontrivial component is a clique of odd order) or ``"rank"``
    when nothing beyond the rank bound was certified.
    """

    value: int
    rank: int
    obstruction: tuple[int, ...] | None
    truncated: bool
    reason: str = "rank"


def odd_clique_union_components(g: Graph) -> list[list[int]] | None:
    """Nontrivial components when each one is a clique of odd order, else ``None``.

    Such a graph never has a perfect odd cover, even when every clique has an
    even number of edges and the even-core parity test says nothing.
    """
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1 or not g.adj[v]:
            continue
        comp = g.adj[v] | (1 << v)
        # a clique component: every member's closed neighbourhood is the component
        if any(g.adj[u] | (1 << u) != comp for u in bit_indices(comp)):
            return None
        if comp.bit_count() % 2 == 0:
            return None
        seen |= comp
        comps.append(bit_indices(comp))
    return comps or None


def _finish(g: Graph, r: int, obstruction: int | tuple[int, ...] | None, truncated: bool) -> LowerBound:
    if obstruction is not None:
        if isinstance(obstruction, int):
            obstruction = tuple(bit_indices(obstruction))
        return LowerBound(r // 2 + 1, r, obstruction, truncated, "even core")
    if odd_clique_union_components(g) is not None:
        return LowerBound(r // 2 + 1, r, None, truncated, "odd cliques")
    return LowerBound(r // 2, r, None, truncated)


def lower_bound(g: Graph, cap: int = DEFAULT_CORE_CAP) -> LowerBound:
    """Rank bound, raised by one when a perfect odd cover is impossible.

    Two certificates are tried.  The first is an even core inducing an odd
    number of edges.  The parity of ``e(G[S])`` is additive on the kernel of
    ``A_G`` (the cross term ``x^T A y`` vanishes there), so checking a kernel
    basis finds such a core whenever one exists.  The second covers disjoint
    unions of odd cliques, which have no perfect odd cover regardless of
    edge parity.  ``truncated`` mirrors the enumeration cap of
    :func:`~oddcover.graph.even_cores`; the bound itself does not depend on it.
    """
    r = rank(g.adjacency())
    basis = kernel_masks(g)
    obstruction = next((s for s in basis if g.induced_edge_count(s) % 2 == 1), None)
    return _finish(g, r, obstruction, len(basis) > cap)


def lower_bound_by_enumeration(g: Graph, cap: int = DEFAULT_CORE_CAP) -> LowerBound:
    """Same bound, searching the enumerated even cores one by one."""
    r = rank(g.adjacency())
    cores = even_cores(g, cap)
    obstruction = next((s for s in cores.sets if g.induced_edge_count(mask_of(s)) % 2 == 1), None)
    return _finish(g, r, obstruction, cores.truncated)


def even_intersection_check(c: OddCover, s: Iterable[int]) -> bool:
    """Whether ``s`` meets both sides of every biclique in an even number of vertices."""
    s = frozenset(s)
    if not s:
        raise ValueError("vertex set must be nonempty")
    return all(len(s & b.x) % 2 == 0 and len(s & b.y) % 2 == 0 for b in c.bicliques)


# -- JSON --------------------------------------------------------------------


class CoverFormatError(ValueError):
    pass


def cover_to_dict(c: OddCover) -> dict:
    return {
        "n": c.n,
        "bicliques": [{"x": sorted(b.x), "y": sorted(b.y)} for b in c.bicliques],
    }


def cover_from_dict(data: dict) -> OddCover:
    try:
        n = data["n"]
        items = data["bicliques"]
    except (KeyError, TypeError):
        raise CoverFormatError("cover JSON needs keys 'n' and 'bicliques'") from None
    if not isinstance(n, int) or n < 0:
        raise CoverFormatError(f"'n' must be a non-negative integer, got {n!r}")
    bicliques = []
    for i, item in enumerate(items):
        try:
            x, y = item["x"], item["y"]
        except (KeyError, TypeError):
            raise CoverFormatError(f"biclique {i}: needs keys 'x' and 'y'") from None
        for side, vals in (("x", x), ("y", y)):
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
                raise CoverFormatError(f"biclique {i}: side {side} must hold integers")
            if len(set(vals)) != len(vals):
                raise CoverFormatError(f"biclique {i}: side {side} repeats a vertex")
            bad = [v for v in vals if not 0 <= v < n]
            if bad:
                raise CoverFormatError(f"biclique {i}: vertex {bad[0]} outside 0..{n - 1}")
        try:
            bicliques.append(Biclique(x, y))
        except ValueError as exc:
            raise CoverFormatError(f"biclique {i}: {exc}") from None
    return OddCover(n, tuple(bicliques))


def dumps(c: OddCover) -> str:
    return json.dumps(cover_to_dict(c))


def loads(text: str) -> OddCover:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CoverFormatError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    return cover_from_dict(data)


eq2_holds = matrix_identity_holds
