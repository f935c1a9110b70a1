"""Checkers for structural facts about perfect odd covers.

None of these prove anything.  They test a concrete cover against statements
that hold for every perfect odd cover, so a failure points at a bug in
whatever produced the cover (or in the checker).
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .cover import OddCover, incidence_matrix, is_perfect
from .f2core import F2Matrix, direct_sum_swaps, mask_of, rank, row_basis, rows_independent
from .graph import Graph, complete_graph

EXHAUSTIVE_LIMIT = 12
DEFAULT_SAMPLES = 10_000


@dataclass
class ItemResult:
    name: str
    passed: bool
    counterexample: object = None
    detail: str = ""


@dataclass
class Report:
    """Per-item outcomes; ``passed`` is true when every item passed."""

    title: str
    items: list[ItemResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def add(self, name: str, passed: bool, counterexample: object = None, detail: str = "") -> None:
        self.items.append(ItemResult(name, passed, counterexample, detail))

    def lines(self) -> list[str]:
        out = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for it in self.items:
            line = f"  [{'pass' if it.passed else 'FAIL'}] {it.name}"
            if it.detail:
                line += f" ({it.detail})"
            if not it.passed and it.counterexample is not None:
                line += f" counterexample={it.counterexample}"
            out.append(line)
        return out

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "items": [
                {
                    "name": it.name,
                    "passed": it.passed,
                    "detail": it.detail,
                    "counterexample": _jsonable(it.counterexample),
                }
                for it in self.items
            ],
        }


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, tuple):
        return [_jsonable(e) for e in x]
    return x


# -- row independence (M A_k M^T = A_G) --------------------------------------------


def _zero_sum_sets(rows: Sequence[int], max_size: int = 4) -> set[frozenset[int]]:
    """All index sets of size <= 4 whose rows sum to zero."""
    out: set[frozenset[int]] = set()
    n = len(rows)
    by_value: dict[int, list[int]] = {}
    for i, r in enumerate(rows):
        if r == 0:
            out.add(frozenset([i]))
        by_value.setdefault(r, []).append(i)
    for group in by_value.values():
        for i, j in itertools.combinations(group, 2):
            out.add(frozenset([i, j]))
    if max_size >= 3:
        for i, j in itertools.combinations(range(n), 2):
            for l in by_value.get(rows[i] ^ rows[j], ()):
                if l != i and l != j:
                    out.add(frozenset([i, j, l]))
    if max_size >= 4:
        pairs: dict[int, list[tuple[int, int]]] = {}
        for i, j in itertools.combinations(range(n), 2):
            pairs.setdefault(rows[i] ^ rows[j], []).append((i, j))
        for group in pairs.values():
            for (a, b), (c, d) in itertools.combinations(group, 2):
                quad = frozenset([a, b, c, d])
                if len(quad) == 4:
                    out.add(quad)
    return out


def row_independence_check(g: Graph, m: F2Matrix, trials: int = 200, seed: int = 0) -> Report:
    """Rows of ``m`` and of ``A_G`` have the same independent subsets.

    Every subset of at most 4 vertices is covered exhaustively (by comparing
    the zero-sum subsets of size <= 4 of both matrices, which determine
    independence of all such subsets); ``trials`` random larger subsets are
    compared with :func:`rows_independent` directly.

    Raises:
        ValueError: unless ``m`` is ``n x rank(A_G)`` with ``m A_k m^T = A_G``.
    """
    a = g.adjacency()
    r = rank(a)
    if m.n_rows != g.n or m.n_cols != r or r % 2:
        raise ValueError(f"matrix must be {g.n} x {r}, got {m.n_rows} x {m.n_cols}")
    if (m @ direct_sum_swaps(r // 2) @ m.transpose()).rows != a.rows:
        raise ValueError("matrix does not satisfy M A_k M^T = A_G")
    report = Report("row independence correspondence")
    small_m, small_a = _zero_sum_sets(m.rows), _zero_sum_sets(a.rows)
    diff = sorted((sorted(s) for s in small_m ^ small_a), key=lambda s: (len(s), s))
    report.add("all subsets of size <= 4", not diff, diff[0] if diff else None)
    rng = random.Random(seed)
    bad = None
    if g.n > 4:
        for _ in range(trials):
            size = rng.randint(5, g.n)
            s = rng.sample(range(g.n), size)
            if rows_independent(m, s) != rows_independent(a, s):
                bad = sorted(s)
                break
    report.add(f"{trials} random larger subsets", bad is None, bad)
    return report


# -- systems of distinct representatives ------------------------------------------


def _max_matching(options: list[list[int]], n_right: int) -> list[int]:
    """Augmenting-path bipartite matching; returns right-match per left vertex (-1 if none)."""
    match_right = [-1] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        for w in options[u]:
            if not seen[w]:
                seen[w] = True
                if match_right[w] == -1 or augment(match_right[w], seen):
                    match_right[w] = u
                    return True
        return False

    for u in range(len(options)):
        augment(u, [False] * n_right)
    match_left = [-1] * len(options)
    for w, u in enumerate(match_right):
        if u != -1:
            match_left[u] = w
    return match_left


def sdr_assignment(c: OddCover, basis: Iterable[int]) -> dict[int, int] | None:
    """Match basis vertices to partite sets ``X1, Y1, ..., Xk, Yk`` (columns ``2i``, ``2i+1``)."""
    basis = list(basis)
    parts = [b.x if side == 0 else b.y for b in c for side in (0, 1)]
    options = [[p for p, s in enumerate(parts) if v in s] for v in basis]
    match = _max_matching(options, len(parts))
    if len(basis) != len(parts) or -1 in match:
        return None
    return dict(zip(basis, match))


def sdr_check(g: Graph, c: OddCover, basis: Iterable[int] | None = None) -> bool:
    """Whether a row basis of ``A_G`` is a transversal of the cover's partite sets.

    ``basis`` defaults to the greedy lowest-index row basis.

    Raises:
        ValueError: if ``c`` is not a perfect odd cover of ``g`` or ``basis``
            does not index a basis of the row space.
    """
    if not is_perfect(g, c):
        raise ValueError("cover is not a perfect odd cover of the graph")
    a = g.adjacency()
    basis = row_basis(a) if basis is None else list(basis)
    if len(basis) != rank(a) or not rows_independent(a, basis):
        raise ValueError("vertex set does not index a basis of the row space")
    return sdr_assignment(c, basis) is not None


# -- perfect covers of even cliques ----------------------------------------------------


def _random_subset(rng: random.Random, n: int, residues: tuple[int, ...]) -> int:
    sizes = [s for s in range(2, n + 1) if s % 4 in residues]
    return mask_of(rng.sample(range(n), rng.choice(sizes)))


def even_clique_props(c: OddCover, two_k: int | None = None, sample: int = DEFAULT_SAMPLES, seed: int = 0) -> Report:
    """Check the four part-size and intersection properties of perfect covers of ``K_{2k}``.

    (i) every part has size 1 mod 4 when ``k`` is odd, 3 mod 4 when even;
    (ii) ``|X_i & X_j|``, ``|X_i & Y_j|``, ``|Y_i & Y_j|`` are odd for ``i != j``;
    (iii) each vertex lies in an odd number of supports ``X_i | Y_i``;
    (iv) every vertex set of size 2 or 3 mod 4 meets both sides of some
    biclique oddly.  Item (iv) is exhaustive up to ``EXHAUSTIVE_LIMIT``
    vertices and sampled (``sample`` sets per residue class) beyond.

    Raises:
        ValueError: if ``c`` is not a perfect odd cover of ``K_{two_k}``.
    """
    two_k = c.n if two_k is None else two_k
    if two_k % 2 or c.n != two_k or not is_perfect(complete_graph(two_k), c):
        raise ValueError(f"cover is not a perfect odd cover of K_{two_k}")
    k = two_k // 2
    report = Report(f"perfect odd cover of K_{two_k}")
    xs = [mask_of(b.x) for b in c]
    ys = [mask_of(b.y) for b in c]

    want = 1 if k % 2 else 3
    bad = next(((i, side) for i in range(k) for side, m in (("X", xs[i]), ("Y", ys[i])) if m.bit_count() % 4 != want), None)
    report.add("(i) part sizes", bad is None, bad, f"all = {want} mod 4")

    bad = None
    for i, j in itertools.permutations(range(k), 2):
        if not ((xs[i] & xs[j]).bit_count() & (xs[i] & ys[j]).bit_count() & (ys[i] & ys[j]).bit_count() & 1):
            bad = (i, j)
            break
    report.add("(ii) pairwise intersections odd", bad is None, bad)

    bad = next((v for v in range(two_k) if sum(1 for b in c if v in b.support) % 2 == 0), None)
    report.add("(iii) odd support multiplicity", bad is None, bad)

    def splits_oddly(a: int) -> bool:
        return any((a & x).bit_count() & (a & y).bit_count() & 1 for x, y in zip(xs, ys))

    bad = None
    if two_k <= EXHAUSTIVE_LIMIT:
        for size in range(2, two_k + 1):
            if size % 4 not in (2, 3):
                continue
            for combo in itertools.combinations(range(two_k), size):
                if not splits_oddly(mask_of(combo)):
                    bad = combo
                    break
            if bad:
                break
        detail = "exhaustive"
    else:
        rng = random.Random(seed)
        for residue in (2, 3):
            for _ in range(sample):
                a = _random_subset(rng, two_k, (residue,))
                if not splits_oddly(a):
                    bad = tuple(v for v in range(two_k) if (a >> v) & 1)
                    break
            if bad:
                break
        detail = f"{sample} samples per residue, seed {seed}"
    report.add("(iv) odd split of sets of size 2, 3 mod 4", bad is None, bad, detail)
    return report


def no_star_parts(c: OddCover) -> bool:
    """No biclique has a side of size one."""
    return all(len(b.x) > 1 and len(b.y) > 1 for b in c)


def same_type_check(c: OddCover, pairing: Sequence[tuple[int, int]]) -> bool:
    """Whether each pair lies in exactly the same biclique supports.

    Raises:
        ValueError: if the pairs do not partition ``0..n-1``.
    """
    flat = [v for p in pairing for v in p]
    if sorted(flat) != list(range(c.n)) or any(len(p) != 2 for p in pairing):
        raise ValueError("pairing must partition the vertex set into pairs")
    return all((u in b.support) == (v in b.support) for u, v in pairing for b in c)


def perfect_cover_checks(g: Graph, c: OddCover) -> list[Report]:
    """Every applicable checker for a perfect odd cover of ``g``."""
    reports = [row_independence_check(g, incidence_matrix(c))]
    sdr = Report("row bases are transversals")
    sdr.add("greedy row basis", sdr_check(g, c))
    reports.append(sdr)
    if g.adj == complete_graph(g.n).adj and g.n % 2 == 0 and g.n > 0:
        reports.append(even_clique_props(c))
    return reports


thm21_check = row_independence_check

__all__ = [
    "Report",
    "even_clique_props",
    "no_star_parts",
    "perfect_cover_checks",
    "same_type_check",
    "sdr_assignment",
    "sdr_check",
    "row_independence_check",
    "thm21_check",
]
