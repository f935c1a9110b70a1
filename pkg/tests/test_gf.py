from __future__ import annotations

import itertools

import pytest

from oddcover.gf import GFVec, gf_new, inner, is_prime, nonzero_vectors, projective_normals, smallest_irreducible


def test_gf_new_examples():
    f3 = gf_new(3, 1)
    assert list(f3.elements()) == [0, 1, 2]
    assert f3.irreducible == (0, 1)  # x
    f9 = gf_new(3, 2)
    assert f9.irreducible == (1, 0, 1)  # x^2 + 1
    with pytest.raises(ValueError, match="not prime"):
        gf_new(4, 1)
    with pytest.raises(ValueError):
        gf_new(3, 0)
    with pytest.raises(ValueError):
        gf_new(2, 17)


def test_smallest_irreducible_by_root_and_factor_check():
    # Degree 2 and 3: irreducible iff no roots; check the lexicographic minimum by brute force.
    for p in (2, 3, 5):
        for m in (2, 3):
            def has_root(poly):
                return any(sum(c * x**i for i, c in enumerate(poly)) % p == 0 for x in range(p))

            first = next(
                tuple(low) + (1,)
                for low in itertools.product(range(p), repeat=m)
                if not has_root(tuple(low) + (1,))
            )
            assert smallest_irreducible(p, m) == first


def test_is_prime():
    assert [x for x in range(20) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize(("p", "m"), [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (7, 1), (2, 4), (3, 3), (3, 4)])
def test_field_axioms(p, m):
    f = gf_new(p, m)
    q = f.q
    els = list(f.elements())
    for a in els:
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
            assert sum(1 for b in els if f.mul(a, b) == 1) == 1
            assert f.pow(a, q - 1) == 1
            assert f.mul(a, f.pow(a, q - 1)) == a
    step = 1 if q <= 27 else 5
    for a in els[::step]:
        for b in els[::step]:
            assert f.mul(a, b) == f.mul(b, a)
            for c in els[::step]:
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    # multiplicative group is cyclic
    assert any(len({f.pow(g, e) for e in range(q - 1)}) == q - 1 for g in els[1:])


def test_inner_examples():
    f3 = gf_new(3)
    assert inner(GFVec(f3, (1, 2)), GFVec(f3, (2, 2))) == 0
    assert inner(GFVec(f3, (1, 2)), GFVec(f3, (0, 0))) == 0
    f9 = gf_new(3, 2)
    x = f9.element([0, 1])
    assert inner(GFVec(f9, (x, 1)), GFVec(f9, (x, 0))) == 2  # x^2 = -1
    with pytest.raises(ValueError):
        inner(GFVec(f3, (1,)), GFVec(f3, (1, 2)))
    with pytest.raises(ValueError):
        inner(GFVec(f3, (1,)), GFVec(f9, (1,)))
    with pytest.raises(ValueError):
        GFVec(f3, (3,))


def test_projective_normals_examples():
    f3 = gf_new(3)
    assert [v.coords for v in projective_normals(f3, 1)] == [(1,)]
    assert [v.coords for v in projective_normals(f3, 2)] == [(0, 1), (1, 0), (1, 1), (1, 2)]
    assert len(projective_normals(gf_new(3, 2), 2)) == 10
    with pytest.raises(ValueError):
        projective_normals(f3, 0)


@pytest.mark.parametrize(("p", "m", "k"), [(2, 1, 5), (3, 1, 4), (3, 2, 2), (5, 1, 3), (2, 2, 3), (7, 1, 2), (3, 2, 3)])
def test_projective_normals_partition_nonzero_vectors(p, m, k):
    f = gf_new(p, m)
    reps = projective_normals(f, k)
    assert len(reps) == (f.q**k - 1) // (f.q - 1)
    # dedup oracle: group every nonzero vector by its set of nonzero multiples
    orbits = {frozenset(tuple(f.mul(a, c) for c in v) for a in range(1, f.q)) for v in itertools.product(range(f.q), repeat=k) if any(v)}
    assert len(orbits) == len(reps)
    seen = set()
    for r in reps:
        orbit = next(o for o in orbits if r.coords in o)
        assert orbit not in seen
        seen.add(orbit)
    assert [r.coords for r in reps] == sorted(r.coords for r in reps)
    assert all(next(c for c in r.coords if c) == 1 for r in reps)


def test_nonzero_vectors_order():
    f3 = gf_new(3)
    vs = [v.coords for v in nonzero_vectors(f3, 2)]
    assert vs == [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]


def test_scale():
    f9 = gf_new(3, 2)
    v = GFVec(f9, (1, 5))
    assert v.scale(0).is_zero()
    assert v.scale(1) == v
