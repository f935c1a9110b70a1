from __future__ import annotations

import itertools
import random

import pytest

from oddcover.constructions import canonical_pairing, double_cover, even_cycle_cover, pairs_18mod24, pairs_to_cover, tomon_cover
from oddcover.cover import Biclique, OddCover, incidence_matrix
from oddcover.f2core import F2Matrix, rank, row_basis, rows_independent
from oddcover.graph import complete_graph, cycle_graph, disjoint_union, from_edges
from oddcover.properties import (
    _zero_sum_sets,
    even_clique_props,
    no_star_parts,
    perfect_cover_checks,
    same_type_check,
    sdr_assignment,
    sdr_check,
    row_independence_check,
)
from oddcover.search import pairs_search

C4_COVER = OddCover(4, (Biclique({0, 2}, {1, 3}),))


def test_row_independence_examples():
    assert row_independence_check(complete_graph(8), incidence_matrix(tomon_cover(2))).passed
    assert row_independence_check(cycle_graph(4), incidence_matrix(C4_COVER)).passed
    with pytest.raises(ValueError):
        row_independence_check(complete_graph(3), F2Matrix.from_lists([[1, 0], [0, 1], [0, 1]]))
    with pytest.raises(ValueError):
        row_independence_check(complete_graph(4), F2Matrix.from_lists([[1, 0, 0, 0]] * 4))


def test_report_rendering():
    rep = row_independence_check(cycle_graph(4), incidence_matrix(C4_COVER))
    assert [it.passed for it in rep.items] == [True, True]
    assert rep.to_dict()["passed"] is True
    assert rep.lines()[0].endswith("PASS")


def test_zero_sum_sets_against_brute_force():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 9)
        rows = [rng.randrange(8) for _ in range(n)]
        brute = set()
        for size in range(1, 5):
            for combo in itertools.combinations(range(n), size):
                acc = 0
                for i in combo:
                    acc ^= rows[i]
                if acc == 0:
                    brute.add(frozenset(combo))
        assert _zero_sum_sets(rows) == brute


def test_sdr_examples():
    k8, tom = complete_graph(8), tomon_cover(2)
    assert sdr_check(k8, tom, range(8))
    assert sdr_check(cycle_graph(4), C4_COVER, [0, 1])
    assert sdr_check(complete_graph(18), pairs_to_cover(pairs_18mod24(18)), range(18))
    with pytest.raises(ValueError):
        sdr_check(cycle_graph(4), C4_COVER, [0, 2])  # dependent rows
    with pytest.raises(ValueError):
        sdr_check(complete_graph(3), OddCover(3, (Biclique({0}, {1, 2}), Biclique({1}, {2}))))


def test_sdr_assignment_is_a_transversal():
    tom = tomon_cover(2)
    match = sdr_assignment(tom, range(8))
    assert sorted(match.values()) == list(range(8))
    parts = [side for b in tom for side in (b.x, b.y)]
    assert all(v in parts[p] for v, p in match.items())


def test_sdr_on_every_basis_of_small_perfect_covers():
    for g, c in [(cycle_graph(6), even_cycle_cover(3)), (cycle_graph(8), even_cycle_cover(4))]:
        a = g.adjacency()
        r = rank(a)
        for s in itertools.combinations(range(g.n), r):
            if rows_independent(a, s):
                assert sdr_check(g, c, s)


def test_even_clique_props_examples():
    rep = even_clique_props(tomon_cover(2), 8)
    assert rep.passed
    assert "3 mod 4" in rep.items[0].detail
    c18 = pairs_to_cover(pairs_18mod24(18))
    rep = even_clique_props(c18, 18, sample=500)
    assert rep.passed and "1 mod 4" in rep.items[0].detail
    tom = tomon_cover(2)
    for (i, a), (j, b) in itertools.permutations(enumerate(tom), 2):
        for p in (a.x, a.y):
            for q in (b.x, b.y):
                assert len(p & q) == 1


def test_even_clique_props_rejects_non_perfect():
    with pytest.raises(ValueError):
        even_clique_props(OddCover(4, (Biclique({0}, {1}),)), 4)


def test_even_clique_props_sampling_is_seeded():
    c = pairs_to_cover(pairs_18mod24(18))
    a = even_clique_props(c, 18, sample=200, seed=4).to_dict()
    b = even_clique_props(c, 18, sample=200, seed=4).to_dict()
    assert a == b


def test_even_clique_props_on_searched_covers():
    for n in (2, 8, 16):
        res = pairs_search(n)
        c = pairs_to_cover(res.matrix)
        assert even_clique_props(c, n, sample=300).passed
        assert no_star_parts(c) or n == 2


def test_same_type_examples():
    c = pairs_to_cover(pairs_18mod24(18))
    assert same_type_check(c, canonical_pairing(18))
    assert same_type_check(OddCover(2, (Biclique({0}, {1}),)), [(0, 1)])
    with pytest.raises(ValueError):
        same_type_check(c, [(0, 1)])
    with pytest.raises(ValueError):
        same_type_check(OddCover(2, (Biclique({0}, {1}),)), [(0, 0)])


def test_same_type_on_tomon_is_reported_not_asserted():
    result = same_type_check(tomon_cover(2), canonical_pairing(8))
    assert isinstance(result, bool)


def test_perfect_cover_checks_bundle():
    reports = perfect_cover_checks(complete_graph(8), tomon_cover(2))
    assert len(reports) == 3 and all(r.passed for r in reports)
    reports = perfect_cover_checks(cycle_graph(6), even_cycle_cover(3))
    assert len(reports) == 2 and all(r.passed for r in reports)


def test_row_independence_random_perfect_covers():
    # Double covers of full-rank graphs are perfect.
    rng = random.Random(9)
    done = 0
    while done < 10:
        n = rng.randint(2, 6)
        h = from_edges(n, [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        if rank(h.adjacency()) != n:
            continue
        g = disjoint_union([h, h])
        assert row_independence_check(g, incidence_matrix(double_cover(h)), trials=50).passed
        assert sdr_check(g, double_cover(h), row_basis(g.adjacency()))
        done += 1
