"""Exact odd cover numbers by backtracking over vertex labelings.

An odd cover with ``k`` bicliques is the same thing as a labeling of the
vertices by strings in ``{0, 1, e}^k``: coordinate ``j`` of a vertex's label is
``0`` if it lies in ``X_j``, ``1`` if in ``Y_j`` and ``e`` (epsilon) if in
neither.  Two vertices are covered an odd number of times exactly when their
labels *clash* (one has 0, the other 1) in an odd number of coordinates.

The search assigns labels vertex by vertex, keeping for every unassigned
vertex the bitset of labels still consistent with all assigned neighbours and
non-neighbours.  Two symmetries of the label space are factored out: swapping
``X_j`` with ``Y_j`` (each coordinate's first non-epsilon symbol is forced to
be 0) and permuting coordinates (columns must stay lexicographically sorted).
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .constructions import SignedPairsMatrix
from .cover import Biclique, OddCover, is_valid, lower_bound
from .f2core import bit_indices
from .graph import Graph, from_edges

EPS = "e"
SYMBOLS = (EPS, "0", "1")  # digit order used for label indices and column sorting
_ALIASES = {"ε": EPS, "e": EPS, "*": EPS, "0": "0", "1": "1"}

YES, NO, TIMEOUT = "yes", "no", "timeout"


def normalize_label(label: str) -> str:
    """Map the accepted epsilon spellings (``ε``, ``e``, ``*``) to ``e``."""
    try:
        return "".join(_ALIASES[ch] for ch in label)
    except KeyError as exc:
        raise ValueError(f"label {label!r} has symbol {exc.args[0]!r} outside {{0, 1, ε}}") from None


def clash(a: str, b: str) -> int:
    """Number of positions where one label has 0 and the other 1."""
    return sum(1 for s, t in zip(a, b) if {s, t} == {"0", "1"})


def labels_graph(labels: Sequence[str]) -> Graph:
    """Graph on the labels, adjacent iff their clash count is odd."""
    labels = [normalize_label(x) for x in labels]
    if len({len(x) for x in labels}) > 1:
        raise ValueError("labels have mixed lengths")
    n = len(labels)
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if clash(labels[i], labels[j]) % 2])


def labeling_to_cover(labels: Sequence[str]) -> OddCover:
    """Cover with one biclique per coordinate: 0 -> X_j, 1 -> Y_j, e -> absent."""
    labels = [normalize_label(x) for x in labels]
    ks = {len(x) for x in labels}
    if len(ks) > 1:
        raise ValueError(f"labels have mixed lengths {sorted(ks)}")
    k = ks.pop() if ks else 0
    return OddCover(
        len(labels),
        tuple(
            Biclique((v for v, x in enumerate(labels) if x[j] == "0"), (v for v, x in enumerate(labels) if x[j] == "1"))
            for j in range(k)
        ),
    )


def cover_to_labeling(c: OddCover) -> list[str]:
    out = []
    for v in range(c.n):
        out.append("".join("0" if v in b.x else "1" if v in b.y else EPS for b in c))
    return out


# -- label tables ----------------------------------------------------------------


@dataclass(frozen=True)
class _Tables:
    k: int
    labels: tuple[str, ...]
    full: int
    adj: tuple[int, ...]  # adj[L]: labels clashing oddly with L
    nonadj: tuple[int, ...]
    support: tuple[int, ...]  # coordinates where L is not epsilon
    ties: tuple[int, ...]  # bit j set when L[j] == L[j+1]
    _allowed: dict = field(default_factory=dict, compare=False, repr=False)

    def allowed(self, tied: int, started: int) -> int:
        """Labels that keep the partial labeling in canonical form.

        ``tied`` marks column pairs ``(j, j+1)`` equal so far; ``started``
        marks columns already holding a non-epsilon symbol.
        """
        key = (tied, started)
        mask = self._allowed.get(key)
        if mask is None:
            mask = 0
            for idx, lab in enumerate(self.labels):
                digits = [SYMBOLS.index(ch) for ch in lab]
                if any(ch == "1" and not (started >> j) & 1 for j, ch in enumerate(lab)):
                    continue
                if any((tied >> j) & 1 and digits[j] > digits[j + 1] for j in range(self.k - 1)):
                    continue
                mask |= 1 << idx
            self._allowed[key] = mask
        return mask


@lru_cache(maxsize=None)
def _tables(k: int) -> _Tables:
    labels = tuple("".join(t) for t in itertools.product(SYMBOLS, repeat=k))
    zero = [sum(1 << j for j, ch in enumerate(lab) if ch == "0") for lab in labels]
    one = [sum(1 << j for j, ch in enumerate(lab) if ch == "1") for lab in labels]
    full = (1 << len(labels)) - 1
    adj = []
    for a in range(len(labels)):
        m = 0
        for b in range(len(labels)):
            if (((zero[a] & one[b]) | (one[a] & zero[b])).bit_count()) & 1:
                m |= 1 << b
        adj.append(m)
    return _Tables(
        k=k,
        labels=labels,
        full=full,
        adj=tuple(adj),
        nonadj=tuple(full ^ m for m in adj),
        support=tuple(z | o for z, o in zip(zero, one)),
        ties=tuple(sum(1 << j for j in range(k - 1) if lab[j] == lab[j + 1]) for lab in labels),
    )


# -- backtracking ------------------------------------------------------------------


class _OutOfTime(Exception):
    pass


@dataclass
class SearchResult:
    """Outcome of a fixed-size search.

    ``status`` is ``"yes"`` (with ``labels``, one per vertex), ``"no"`` after
    full exhaustion, or ``"timeout"``.
    """

    status: str
    labels: list[str] | None = None
    nodes: int = 0

    @property
    def cover(self) -> OddCover | None:
        return None if self.labels is None else labeling_to_cover(self.labels)

    def __bool__(self) -> bool:
        return self.status == YES


def vertex_order(g: Graph) -> list[int]:
    """Degree-descending, ties broken by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


class _Searcher:
    def __init__(self, g: Graph, k: int, deadline: float | None) -> None:
        self.t = _tables(k)
        self.order = vertex_order(g)
        pos = {v: i for i, v in enumerate(self.order)}
        # adjacency in search positions
        self.adj_pos = [sum(1 << pos[u] for u in g.neighbors(v)) for v in self.order]
        self.n = g.n
        self.deadline = deadline
        self.nodes = 0
        self.chosen = [0] * g.n

    def initial(self) -> tuple[list[int], int, int]:
        tied = (1 << max(self.t.k - 1, 0)) - 1
        return [self.t.full] * self.n, tied, 0

    def candidates(self, pos: int, domains: list[int], tied: int, started: int) -> list[int]:
        return bit_indices(domains[pos] & self.t.allowed(tied, started))

    def step(self, pos: int, lab: int, domains: list[int], tied: int, started: int):
        """Assign ``lab`` at ``pos``; returns the narrowed state or ``None``."""
        t = self.t
        nbrs = self.adj_pos[pos]
        a, na = t.adj[lab], t.nonadj[lab]
        new = domains[:]
        for q in range(pos + 1, self.n):
            d = new[q] & (a if (nbrs >> q) & 1 else na)
            if not d:
                return None
            new[q] = d
        return new, tied & t.ties[lab], started | t.support[lab]

    def dfs(self, pos: int, domains: list[int], tied: int, started: int) -> bool:
        if pos == self.n:
            return True
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _OutOfTime
        for lab in self.candidates(pos, domains, tied, started):
            state = self.step(pos, lab, domains, tied, started)
            if state is None:
                continue
            self.chosen[pos] = lab
            if self.dfs(pos + 1, *state):
                return True
        return False

    def labels(self) -> list[str]:
        out = [""] * self.n
        for pos, v in enumerate(self.order):
            out[v] = self.t.labels[self.chosen[pos]]
        return out

    def branches(self) -> list[tuple[int, ...]]:
        """Label prefixes for the first two positions, in search order."""
        if self.n < 2:
            return [()]
        out = []
        domains, tied, started = self.initial()
        for a in self.candidates(0, domains, tied, started):
            s1 = self.step(0, a, domains, tied, started)
            if s1 is None:
                continue
            for b in self.candidates(1, *s1):
                if self.step(1, b, *s1) is not None:
                    out.append((a, b))
        return out

    def run_prefix(self, prefix: tuple[int, ...]) -> bool:
        state = self.initial()
        for pos, lab in enumerate(prefix):
            state = self.step(pos, lab, *state)
            if state is None:
                return False
            self.chosen[pos] = lab
        return self.dfs(len(prefix), *state)


def _run_branch(args) -> tuple[str, list[str] | None, int]:
    g, k, deadline, prefix = args
    s = _Searcher(g, k, deadline)
    try:
        found = s.run_prefix(prefix)
    except _OutOfTime:
        return TIMEOUT, None, s.nodes
    return (YES, s.labels(), s.nodes) if found else (NO, None, s.nodes)


def has_cover_of_size(g: Graph, k: int, budget: float | None = None, threads: int = 1) -> SearchResult:
    """Decide whether ``g`` has an odd cover with ``k`` bicliques.

    Args:
        g: target graph.
        k: number of bicliques.
        budget: wall-clock limit in seconds (``None`` for no limit).
        threads: worker processes; the first two vertices' labels are split
            into independent branches.  Results do not depend on this value.

    Returns:
        A :class:`SearchResult`.  ``"no"`` is only reported after the whole
        space was exhausted.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    deadline = None if budget is None else time.monotonic() + budget
    if g.n == 0:
        return SearchResult(YES, [])
    if threads <= 1:
        s = _Searcher(g, k, deadline)
        state = s.initial()
        try:
            found = s.dfs(0, *state)
        except _OutOfTime:
            return SearchResult(TIMEOUT, nodes=s.nodes)
        return SearchResult(YES, s.labels(), s.nodes) if found else SearchResult(NO, nodes=s.nodes)

    branches = _Searcher(g, k, deadline).branches()
    nodes = 0
    timed_out = False
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_branch, (g, k, deadline, b)) for b in branches]
        try:
            # Scan in branch order so the reported witness matches the
            # sequential search regardless of scheduling.
            for fut in futures:
                status, labels, cnt = fut.result()
                nodes += cnt
                if status == YES and not timed_out:
                    return SearchResult(YES, labels, nodes)
                if status == TIMEOUT:
                    timed_out = True
        finally:
            for fut in futures:
                fut.cancel()
    return SearchResult(TIMEOUT if timed_out else NO, nodes=nodes)


class SearchTimeout(Exception):
    """Budget exhausted; ``lower`` and ``upper`` bracket the odd cover number."""

    def __init__(self, lower: int, upper: int) -> None:
        super().__init__(f"search budget exhausted; b2 in [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper


@dataclass
class ExactResult:
    value: int
    witness: OddCover
    labels: list[str]


def star_upper_bound(g: Graph) -> int:
    """Size of the cover by stars from each vertex to its later neighbours."""
    return sum(1 for v in range(g.n) if g.adj[v] >> (v + 1))


def b2_exact(g: Graph, budget: float | None = None, threads: int = 1, max_k: int | None = None) -> ExactResult:
    """Minimum odd cover of ``g`` with a certified witness.

    Tries ``k = lower_bound(g), lower_bound(g) + 1, ...`` until a labeling is
    found.

    Raises:
        SearchTimeout: when ``budget`` runs out first.
        LookupError: when every ``k <= max_k`` was refuted.
    """
    deadline = None if budget is None else time.monotonic() + budget
    k = lower_bound(g).value
    upper = star_upper_bound(g)
    while True:
        if max_k is not None and k > max_k:
            raise LookupError(f"no odd cover with at most {max_k} bicliques")
        remaining = None if deadline is None else max(deadline - time.monotonic(), 0.0)
        res = has_cover_of_size(g, k, remaining, threads)
        if res.status == TIMEOUT:
            raise SearchTimeout(k, max(upper, k))
        if res.status == YES:
            cover = res.cover
            if not is_valid(g, cover):
                raise AssertionError("search produced an invalid witness")
            return ExactResult(k, cover, res.labels)
        k += 1


# -- pairs constructions ----------------------------------------------------------


@dataclass
class PairsResult:
    status: str  # "found", "none" or "timeout"
    matrix: SignedPairsMatrix | None = None
    nodes: int = 0


def _pairs_rows(s: int) -> list[tuple[int, ...]]:
    rows = []
    for r in itertools.product((0, 1, -1), repeat=s):
        nz = [e for e in r if e]
        if len(nz) % 2 == 1 and nz[0] == 1:
            rows.append(r)
    return rows


_SIGN_ORDER = {0: 0, 1: 1, -1: 2}


def _is_canonical(row: tuple[int, ...], cells: tuple[tuple[int, int, bool], ...]) -> bool:
    for a, b, negatable in cells:
        prev = -1
        for e in row[a:b]:
            if negatable and e == -1:
                return False
            key = _SIGN_ORDER[e]
            if key < prev:
                return False
            prev = key
    return True


def _refine(row: tuple[int, ...], cells: tuple[tuple[int, int, bool], ...]) -> tuple[tuple[int, int, bool], ...]:
    out = []
    for a, b, negatable in cells:
        start = a
        for j in range(a + 1, b + 1):
            if j == b or row[j] != row[start]:
                out.append((start, j, negatable and row[start] == 0))
                start = j
    return tuple(out)


def pairs_search(n: int, budget: float | None = None) -> PairsResult:
    """Look for a pairs construction of a perfect odd cover of ``K_n``.

    The matrix is searched as a set of ``n/2`` rows, each with first nonzero
    entry ``+1`` (reordering pairs or swapping the two vertices of a pair
    gives an equivalent cover).  Every two rows must have an odd number of
    columns with opposite signs and an odd number with equal signs.

    Rows are picked in order of non-decreasing support.  Column permutations
    and negations are factored out: each picked row, up to sign, must be in
    canonical form (entries sorted ``0, +1, -1`` within every block of columns
    that are still interchangeable, no ``-1`` where columns can still be
    negated), and the blocks are then split by that row's entries.  Once no
    column symmetry is left the remaining rows are taken as an index-ordered
    set.  Column supports are pruned to the residue forced on part sizes of
    perfect covers of even cliques: 1 mod 4 when ``n/2`` is odd, 3 mod 4 when
    it is even.
    """
    if n % 2:
        raise ValueError("n must be even")
    s = n // 2
    if s == 0:
        return PairsResult("found", SignedPairsMatrix(()))
    deadline = None if budget is None else time.monotonic() + budget

    def check_time() -> None:
        if deadline is not None and time.monotonic() > deadline:
            raise _OutOfTime

    rows = _pairs_rows(s)
    pos_mask = [sum(1 << j for j, e in enumerate(r) if e == 1) for r in rows]
    neg_mask = [sum(1 << j for j, e in enumerate(r) if e == -1) for r in rows]
    supports = [p | q for p, q in zip(pos_mask, neg_mask)]

    compat_cache: dict[int, int] = {}

    def compat(a: int) -> int:
        """Rows meeting row ``a`` with odd equal-sign and odd opposite-sign counts."""
        mask = compat_cache.get(a)
        if mask is None:
            check_time()
            pa, na = pos_mask[a], neg_mask[a]
            mask = 0
            for b, (pb, nb) in enumerate(zip(pos_mask, neg_mask)):
                if ((pa & pb) | (na & nb)).bit_count() & ((pa & nb) | (na & pb)).bit_count() & 1:
                    mask |= 1 << b
            compat_cache[a] = mask
        return mask

    at_least = [0] * (s + 2)  # rows with support >= t
    for r, sup in enumerate(supports):
        for t in range(sup.bit_count() + 1):
            at_least[t] |= 1 << r

    canon_cache: dict[tuple, int] = {}

    def canonical_rows(cells: tuple) -> int:
        mask = canon_cache.get(cells)
        if mask is None:
            check_time()
            mask = 0
            for r, row in enumerate(rows):
                if _is_canonical(row, cells) or _is_canonical(tuple(-e for e in row), cells):
                    mask |= 1 << r
            canon_cache[cells] = mask
        return mask

    target = 1 if s % 2 else 3
    chosen: list[int] = []
    nodes = 0

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if nodes & 1023 == 0:
            check_time()

    def columns_ok(counts: list[int], left: int) -> bool:
        return all((target - c) % 4 <= left for c in counts)

    def with_row(counts: list[int], r: int) -> list[int]:
        sup = supports[r]
        return [c + ((sup >> j) & 1) for j, c in enumerate(counts)]

    def free_set(cand: int, counts: list[int]) -> bool:
        # No column symmetry left: pick the remaining rows as a set.
        tick()
        left = s - len(chosen)
        if left == 0:
            return all(c % 4 == target for c in counts)
        if cand.bit_count() < left:
            return False
        while cand:
            r = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            new_counts = with_row(counts, r)
            if not columns_ok(new_counts, left - 1):
                continue
            chosen.append(r)
            if free_set(cand & compat(r), new_counts):
                return True
            chosen.pop()
        return False

    def canonical(cand: int, counts: list[int], cells: tuple, min_support: int) -> bool:
        if all(b - a == 1 and not neg for a, b, neg in cells):
            return free_set(cand & at_least[min_support], counts)
        tick()
        left = s - len(chosen)
        if left == 0:
            return all(c % 4 == target for c in counts)
        cand &= at_least[min_support]
        if cand.bit_count() < left:
            return False
        for r in bit_indices(cand & canonical_rows(cells)):
            new_counts = with_row(counts, r)
            if not columns_ok(new_counts, left - 1):
                continue
            chosen.append(r)
            row = rows[r] if _is_canonical(rows[r], cells) else tuple(-e for e in rows[r])
            if canonical(cand & compat(r), new_counts, _refine(row, cells), supports[r].bit_count()):
                return True
            chosen.pop()
        return False

    try:
        found = canonical((1 << len(rows)) - 1, [0] * s, ((0, s, True),), 0)
    except _OutOfTime:
        return PairsResult("timeout", nodes=nodes)
    if not found:
        return PairsResult("none", nodes=nodes)
    return PairsResult("found", SignedPairsMatrix(tuple(rows[r] for r in sorted(chosen))), nodes)
