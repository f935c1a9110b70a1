from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oddcover.constructions import double_cover, even_cycle_cover, odd_clique_cover, tomon_cover
from oddcover.cover import (
    Biclique,
    CoverFormatError,
    OddCover,
    coverage_count,
    cover_from_dict,
    dumps,
    matrix_identity_holds,
    even_intersection_check,
    incidence_matrix,
    is_perfect,
    is_valid,
    loads,
    lower_bound,
    lower_bound_by_enumeration,
    odd_clique_union_components,
    verify,
)
from oddcover.f2core import bit_indices, rank
from oddcover.graph import complete_graph, cycle_graph, disjoint_union, empty_graph, even_cores, from_edges
from oddcover.search import b2_exact
from oracles import b2_table


def k3_cover() -> OddCover:
    return OddCover(3, (Biclique({0}, {1, 2}), Biclique({1}, {2})))


def test_biclique_rejects_overlap():
    with pytest.raises(ValueError, match="overlap"):
        Biclique({0, 1}, {1})


def test_cover_rejects_out_of_range():
    with pytest.raises(ValueError):
        OddCover(2, (Biclique({0}, {2}),))


def test_coverage_count_examples():
    k2 = OddCover(2, (Biclique({0}, {1}),))
    assert coverage_count(k2, 0, 1) == 1
    assert coverage_count(k2.extended([Biclique({0}, {1})]), 0, 1) == 2
    with pytest.raises(ValueError):
        coverage_count(k2, 1, 1)


def test_k5_witness_by_search():
    res = b2_exact(complete_graph(5), budget=60)
    assert res.value == 3
    for u, v in itertools.combinations(range(5), 2):
        assert coverage_count(res.witness, u, v) % 2 == 1


def test_verify_examples():
    assert verify(complete_graph(3), k3_cover()).valid
    rep = verify(complete_graph(3), OddCover(3, (Biclique({0}, {1, 2}),)))
    assert not rep.valid
    assert [(v.pair, v.parity) for v in rep.violations] == [((1, 2), "even")]
    assert verify(complete_graph(5), odd_clique_cover(2)).valid
    with pytest.raises(ValueError):
        verify(complete_graph(4), k3_cover())


def test_incidence_examples():
    assert incidence_matrix(OddCover(2, (Biclique({0}, {1}),))).to_lists() == [[1, 0], [0, 1]]
    empty = incidence_matrix(OddCover(3))
    assert (empty.n_rows, empty.n_cols) == (3, 0)


def test_matrix_identity_examples():
    assert matrix_identity_holds(complete_graph(3), k3_cover())
    assert matrix_identity_holds(complete_graph(5), odd_clique_cover(2))
    assert not matrix_identity_holds(complete_graph(3), OddCover(3, (Biclique({0}, {1}),)))
    assert matrix_identity_holds(empty_graph(0), OddCover(0))
    assert matrix_identity_holds(empty_graph(4), OddCover(4))


@st.composite
def covers(draw, n: int, max_k: int = 6) -> OddCover:
    k = draw(st.integers(0, max_k))
    bs = []
    for _ in range(k):
        sides = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
        bs.append(Biclique([v for v in range(n) if sides[v] == 1], [v for v in range(n) if sides[v] == 2]))
    return OddCover(n, tuple(bs))


def _pairwise_graph(c: OddCover):
    edges = [(u, v) for u, v in itertools.combinations(range(c.n), 2) if sum(b.covers(u, v) for b in c) % 2]
    return from_edges(c.n, edges)


@given(st.data())
def test_verify_agrees_with_matrix_identity(data):
    n = data.draw(st.integers(1, 12))
    c = data.draw(covers(n))
    g = _pairwise_graph(c) if data.draw(st.booleans()) else data.draw(graphs(min_n=n, max_n=n))
    v = verify(g, c).valid
    assert v == matrix_identity_holds(g, c) == is_valid(g, c)
    if v:
        r_m = rank(incidence_matrix(c))
        assert rank(g.adjacency()) <= r_m <= 2 * len(c)


def test_is_perfect_examples():
    assert is_perfect(complete_graph(8), tomon_cover(2))
    assert not is_perfect(complete_graph(5), odd_clique_cover(2))
    assert is_perfect(cycle_graph(4), OddCover(4, (Biclique({0, 2}, {1, 3}),)))


def test_lower_bound_examples():
    assert lower_bound(cycle_graph(5)).value == 3
    assert lower_bound(cycle_graph(4)).value == 1
    lb = lower_bound(disjoint_union([complete_graph(3), cycle_graph(4)]))
    assert (lb.value, lb.rank) == (3, 4)
    assert set(lb.obstruction) == {0, 1, 2}


def test_lower_bound_odd_clique_rule():
    k5 = complete_graph(5)
    assert lower_bound(k5) == (3, 4, None, False, "odd cliques")
    assert lower_bound(disjoint_union([k5, empty_graph(2), complete_graph(9)])).value == 7
    assert lower_bound(disjoint_union([k5, complete_graph(3)])).reason == "even core"
    assert lower_bound(complete_graph(4)).reason == "rank"
    assert lower_bound(disjoint_union([k5, cycle_graph(4)])).value == 3
    assert odd_clique_union_components(disjoint_union([k5, complete_graph(3)])) == [[0, 1, 2, 3, 4], [5, 6, 7]]
    assert odd_clique_union_components(empty_graph(3)) is None


@given(graphs(max_n=10))
def test_lower_bound_by_basis_equals_enumeration(g):
    assert lower_bound(g).value == lower_bound_by_enumeration(g).value


def test_lower_bound_below_oracle():
    for n in range(1, 7):
        table = b2_table(n)
        pairs = list(itertools.combinations(range(n), 2))
        for mask, b2 in table.items():
            g = from_edges(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
            assert lower_bound(g).value <= b2


def test_even_intersection_examples():
    c4c4 = disjoint_union([cycle_graph(4), cycle_graph(4)])
    cover = even_cycle_cover(2).extended(even_cycle_cover(2).relabel([4, 5, 6, 7], 8), 8)
    cover = OddCover(8, cover.bicliques)
    assert is_perfect(c4c4, cover)
    assert even_intersection_check(cover, {0, 2})
    assert not even_intersection_check(OddCover(2, (Biclique({0}, {1}),)), {0})
    assert even_intersection_check(OddCover(4, (Biclique({2}, {3}),)), {0, 1})
    with pytest.raises(ValueError):
        even_intersection_check(cover, set())


def _perfect_covers():
    yield complete_graph(8), tomon_cover(2)
    yield cycle_graph(10), even_cycle_cover(5)
    yield disjoint_union([complete_graph(4), complete_graph(4)]), double_cover(complete_graph(4))
    path = from_edges(4, [(0, 1), (1, 2), (2, 3)])  # full rank
    yield disjoint_union([path, path]), double_cover(path)


def test_even_cores_match_even_intersection_on_perfect_covers():
    for g, c in _perfect_covers():
        assert is_perfect(g, c)
        cores = {frozenset(s) for s in even_cores(g).sets}
        for m in range(1, 1 << g.n):
            s = bit_indices(m)
            assert even_intersection_check(c, s) == (frozenset(s) in cores)


def test_size_three_minimal_even_cores_are_independent():
    # Graphs on up to 6 vertices whose odd cover number meets the rank bound.
    for n in range(3, 7):
        table = b2_table(n)
        pairs = list(itertools.combinations(range(n), 2))
        for mask, b2 in table.items():
            g = from_edges(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
            if 2 * b2 != rank(g.adjacency()):
                continue
            cores = {frozenset(s) for s in even_cores(g).sets}
            for w in cores:
                if len(w) == 3 and not any(s < w for s in cores):
                    assert all(not g.has_edge(u, v) for u, v in itertools.combinations(w, 2))


def test_json_round_trip_is_stable():
    c = odd_clique_cover(3)
    text = dumps(c)
    assert loads(text) == c
    assert dumps(loads(text)) == text
    assert list(json.loads(text)) == ["n", "bicliques"]
    assert json.loads(text)["bicliques"][0] == {"x": [1, 4], "y": [0, 2, 3]}


@pytest.mark.parametrize(
    "data",
    [
        {"n": 2},
        {"n": -1, "bicliques": []},
        {"n": 2, "bicliques": [{"x": [0]}]},
        {"n": 2, "bicliques": [{"x": [0], "y": [2]}]},
        {"n": 2, "bicliques": [{"x": [0], "y": [0]}]},
        {"n": 2, "bicliques": [{"x": [0, 0], "y": [1]}]},
        {"n": 2, "bicliques": [{"x": ["0"], "y": [1]}]},
    ],
)
def test_cover_json_rejects(data):
    with pytest.raises(CoverFormatError):
        cover_from_dict(data)


def test_cover_json_syntax_error_has_line():
    with pytest.raises(CoverFormatError, match="line 2"):
        loads('{"n": 2,\n "bicliques": [}')

