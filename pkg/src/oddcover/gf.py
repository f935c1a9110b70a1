"""Small finite fields F_q, q = p**m, and vectors over them.

An element is stored as an integer ``0 <= e < q`` whose base-``p`` digits
are the polynomial coefficients, lowest degree in the least significant digit.
So the integer order of elements is the "coefficient vector read as a base-p
integer" order used to label nonzero elements ``0..q-2``.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

MAX_FIELD_SIZE = 1 << 16
_TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``b`` (coefficients low to high)."""
    a = a[:]
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [x % p for x in a[:db]] + [0] * max(0, db - len(a))


def _is_irreducible(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(poly, list(low) + [1], p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``m`` over F_p.

    Coefficients are listed low to high and compared in that order; the
    leading 1 is included.  For ``m == 1`` this is ``x``.
    """
    for low in itertools.product(range(p), repeat=m):
        poly = list(low) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class GFContext:
    """The field F_p[x] / (irreducible)."""

    p: int
    m: int
    irreducible: tuple[int, ...]
    _mul: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def element(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            raise ValueError(f"element needs at most {self.m} coefficients")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        return self.element([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        return self.element([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.element(_poly_rem(prod, list(self.irreducible), self.p))

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> list[int]:
        """Nonzero elements in label order; element ``e`` gets label ``e - 1``."""
        return list(range(1, self.q))


def gf_new(p: int, m: int = 1) -> GFContext:
    """Field with ``p**m`` elements built on the smallest monic irreducible.

    Raises:
        ValueError: if ``p`` is not prime, ``m < 1``, or the field would
            exceed ``2**16`` elements.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be at least 1")
    if p**m > MAX_FIELD_SIZE:
        raise ValueError(f"field size {p}**{m} exceeds {MAX_FIELD_SIZE}")
    ctx = GFContext(p, m, smallest_irreducible(p, m))
    if ctx.q <= _TABLE_LIMIT:
        table = tuple(tuple(ctx._mul_poly(a, b) for b in range(ctx.q)) for a in range(ctx.q))
        object.__setattr__(ctx, "_mul", table)
    return ctx


@dataclass(frozen=True)
class GFVec:
    """Vector in F_q^k."""

    context: GFContext
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(self.coords))
        for c in self.coords:
            if not 0 <= c < self.context.q:
                raise ValueError(f"{c} is not an element of F_{self.context.q}")

    def __len__(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def scale(self, a: int) -> GFVec:
        return GFVec(self.context, tuple(self.context.mul(a, c) for c in self.coords))


def inner(u: GFVec, v: GFVec) -> int:
    """Standard bilinear form ``sum u_i v_i`` in F_q."""
    if u.context != v.context:
        raise ValueError("vectors live over different fields")
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    ctx = u.context
    acc = 0
    for a, b in zip(u.coords, v.coords):
        acc = ctx.add(acc, ctx.mul(a, b))
    return acc


def nonzero_vectors(ctx: GFContext, k: int) -> list[GFVec]:
    """All nonzero vectors of F_q^k in lexicographic order."""
    return [GFVec(ctx, c) for c in itertools.product(range(ctx.q), repeat=k) if any(c)]


def projective_normals(ctx: GFContext, k: int) -> list[GFVec]:
    """One vector per 1-dimensional subspace of F_q^k.

    Each representative has first nonzero coordinate 1; the list is in
    lexicographic order and has ``(q**k - 1) / (q - 1)`` entries.
    """
    if k < 1:
        raise ValueError("dimension must be at least 1")
    return [v for v in nonzero_vectors(ctx, k) if next(c for c in v.coords if c) == 1]
