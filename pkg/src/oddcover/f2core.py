"""Dense linear algebra over GF(2) on bit-packed rows.

Rows are Python integers used as bit vectors: bit ``j`` of a row is the entry
in column ``j``.  All arithmetic is exact; there is no float or rational code
anywhere in this module.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

MAX_COLS = 4096


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bit_indices(x: int) -> list[int]:
    """Return the positions of the set bits of ``x`` in ascending order."""
    return list(_bits(x))


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class F2Matrix:
    """Immutable ``n_rows x n_cols`` matrix over GF(2).

    Attributes:
        n_rows: number of rows.
        n_cols: number of columns (at most ``MAX_COLS``).
        rows: one integer per row; bit ``j`` holds column ``j``.
    """

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if self.n_cols > MAX_COLS:
            raise ValueError(f"at most {MAX_COLS} columns are supported, got {self.n_cols}")
        if len(self.rows) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        for i, r in enumerate(self.rows):
            if r < 0 or r >> self.n_cols:
                raise ValueError(f"row {i} has bits outside {self.n_cols} columns")

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> F2Matrix:
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], n_cols: int | None = None) -> F2Matrix:
        """Build a matrix from nested 0/1 lists (entries are reduced mod 2)."""
        if n_cols is None:
            n_cols = len(entries[0]) if entries else 0
        rows = []
        for i, row in enumerate(entries):
            if len(row) != n_cols:
                raise ValueError(f"row {i} has length {len(row)}, expected {n_cols}")
            rows.append(mask_of(j for j, e in enumerate(row) if e % 2))
        return cls(len(rows), n_cols, tuple(rows))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n_cols)] for r in self.rows]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def transpose(self) -> F2Matrix:
        cols = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            for j in _bits(r):
                cols[j] |= 1 << i
        return F2Matrix(self.n_cols, self.n_rows, tuple(cols))

    def __matmul__(self, other: F2Matrix) -> F2Matrix:
        if self.n_cols != other.n_rows:
            raise ValueError(f"shape mismatch: {self.n_cols} columns vs {other.n_rows} rows")
        out = []
        for r in self.rows:
            acc = 0
            for j in _bits(r):
                acc ^= other.rows[j]
            out.append(acc)
        return F2Matrix(self.n_rows, other.n_cols, tuple(out))

    def submatrix(self, rows: Iterable[int]) -> F2Matrix:
        picked = tuple(self.rows[i] for i in rows)
        return F2Matrix(len(picked), self.n_cols, picked)


def direct_sum_swaps(k: int) -> F2Matrix:
    """Adjacency matrix of a perfect matching on ``2k`` vertices.

    This is the block-diagonal sum of ``k`` copies of ``[[0, 1], [1, 0]]``.
    """
    rows = []
    for i in range(k):
        rows.append(1 << (2 * i + 1))
        rows.append(1 << (2 * i))
    return F2Matrix(2 * k, 2 * k, tuple(rows))


def _echelon(rows: Sequence[int]) -> list[int]:
    """Independent pivot rows spanning the same space as ``rows``.

    Each returned row has a distinct leading (highest) bit.
    """
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                break
            r ^= p
    return list(pivots.values())


def rank(m: F2Matrix) -> int:
    """Dimension of the row space of ``m`` over GF(2)."""
    return len(_echelon(m.rows))


def rows_independent(m: F2Matrix, s: Iterable[int]) -> bool:
    """Whether the rows of ``m`` indexed by ``s`` are linearly independent.

    Raises:
        IndexError: if an index is outside ``0..n_rows-1``.
    """
    idx = list(s)
    for i in idx:
        if not 0 <= i < m.n_rows:
            raise IndexError(f"row index {i} out of range for {m.n_rows} rows")
    if len(set(idx)) != len(idx):
        return False
    return len(_echelon([m.rows[i] for i in idx])) == len(idx)


def row_basis(m: F2Matrix) -> list[int]:
    """Indices of a basis of the row space, chosen greedily by lowest index."""
    pivots: dict[int, int] = {}
    chosen = []
    for i, r in enumerate(m.rows):
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                chosen.append(i)
                break
            r ^= p
    return chosen


def kernel_basis(m: F2Matrix) -> list[int]:
    """Basis of the left null space ``{x : x^T m = 0}``.

    Each basis vector is an integer with bit ``i`` set when row ``i`` takes
    part in the relation.  The basis is returned in reduced echelon form
    (distinct leading bits, each leading bit cleared from every other vector),
    sorted by leading bit, so the output does not depend on elimination order.
    """
    # Track row combinations by appending an identity block above the columns.
    shift = m.n_cols
    pivots: dict[int, int] = {}
    relations = []
    for i, r in enumerate(m.rows):
        v = r | (1 << (shift + i))
        low = (1 << shift) - 1
        while v & low:
            top = (v & low).bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                break
            v ^= p
        else:
            relations.append(v >> shift)
    return _reduce(relations)


def _reduce(vectors: Sequence[int]) -> list[int]:
    basis = sorted(_echelon(vectors), key=int.bit_length)
    # Back-substitute so every leading bit appears in exactly one vector.
    for i in range(len(basis)):
        top = 1 << (basis[i].bit_length() - 1)
        for j in range(len(basis)):
            if j != i and basis[j] & top:
                basis[j] ^= basis[i]
    return sorted(basis, key=int.bit_length)
