from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given

from conftest import graphs
from oddcover.constructions import pairs_to_cover
from oddcover.cover import is_perfect, verify
from oddcover.graph import complete_graph, cycle_graph, from_edges
from oddcover.search import (
    NO,
    TIMEOUT,
    YES,
    SearchTimeout,
    b2_exact,
    clash,
    cover_to_labeling,
    has_cover_of_size,
    labeling_to_cover,
    labels_graph,
    normalize_label,
    pairs_search,
    star_upper_bound,
)
from oracles import b2_table, brute_pairs_exists, edge_mask

H1 = "e00e e11e 1101 1011 e0ee 11e1 1e11 ee0e 0111 e110".split()
H2 = "00eee 0e0ee 0e101 01e01 011e0 1e1ee 1e001 e1111 e00ee e11ee e0011 e0101 e1001".split()


def test_labels():
    assert normalize_label("ε0*1") == "e0e1"
    with pytest.raises(ValueError):
        normalize_label("02")
    assert clash("0e1", "110") == 2
    assert clash("0e1", "1e1") == 1


def test_labeling_to_cover_examples():
    c = labeling_to_cover(["0", "1"])
    assert [(sorted(b.x), sorted(b.y)) for b in c] == [([0], [1])]
    c = labeling_to_cover(["ε"])
    assert c.n == 1 and c.covered_graph().num_edges == 0
    with pytest.raises(ValueError, match="mixed"):
        labeling_to_cover(["01", "1"])
    with pytest.raises(ValueError, match="mixed"):
        labels_graph(["01", "1"])


def test_h1_labels_give_a_cover():
    g = labels_graph(H1)
    c = labeling_to_cover(H1)
    assert len(c) == 4 and verify(g, c).valid
    assert cover_to_labeling(c) == H1


def test_has_cover_of_size_examples():
    k5 = complete_graph(5)
    res = has_cover_of_size(k5, 3)
    assert res.status == YES and verify(k5, res.cover).valid and len(res.cover) == 3
    assert has_cover_of_size(k5, 2).status == NO
    assert has_cover_of_size(complete_graph(4), 2).status == NO
    assert has_cover_of_size(from_edges(0, []), 0).status == YES
    with pytest.raises(ValueError):
        has_cover_of_size(k5, -1)


def test_b2_exact_examples():
    assert b2_exact(complete_graph(3)).value == 2
    assert b2_exact(cycle_graph(5)).value == 3
    res = b2_exact(complete_graph(7))
    assert res.value == 4 and verify(complete_graph(7), res.witness).valid


def test_b2_exact_limits():
    with pytest.raises(LookupError):
        b2_exact(complete_graph(7), max_k=3)
    with pytest.raises(SearchTimeout) as info:
        b2_exact(labels_graph(H2), budget=0.0)
    assert info.value.lower == 4 and info.value.upper >= 5
    assert has_cover_of_size(labels_graph(H2), 4, budget=0.0).status == TIMEOUT


def test_star_upper_bound():
    assert star_upper_bound(complete_graph(5)) == 4
    assert star_upper_bound(from_edges(3, [])) == 0


@given(graphs(max_n=6))
def test_b2_exact_matches_oracle(g):
    assert b2_exact(g).value == b2_table(g.n)[edge_mask(g.n, g.edges())]


def test_search_deterministic_across_threads():
    for g, k in [(complete_graph(7), 4), (cycle_graph(7), 4), (complete_graph(6), 3)]:
        one = has_cover_of_size(g, k)
        many = has_cover_of_size(g, k, threads=3)
        assert one.status == many.status
        assert one.labels == many.labels
        assert has_cover_of_size(g, k).labels == one.labels


def test_monotone_in_k():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(2, 7)
        g = from_edges(n, [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        b = b2_exact(g).value
        for k in range(b, b + 2):
            assert has_cover_of_size(g, k).status == YES
        if b:
            assert has_cover_of_size(g, b - 1).status == NO


def test_pairs_search_small_n_matches_brute_force():
    for n in (2, 4, 6):
        res = pairs_search(n)
        assert (res.status == "found") == brute_pairs_exists(n)


@pytest.mark.parametrize(("n", "status"), [(2, "found"), (4, "none"), (6, "none"), (8, "found"), (10, "none"), (12, "none")])
def test_pairs_search_outcomes(n, status):
    res = pairs_search(n, budget=60)
    assert res.status == status
    if res.matrix is not None:
        assert is_perfect(complete_graph(n), pairs_to_cover(res.matrix))


def test_pairs_search_n2_matrix():
    assert pairs_search(2).matrix.entries == ((1,),)


def test_pairs_search_n18():
    res = pairs_search(18, budget=120)
    assert res.status == "found"
    assert is_perfect(complete_graph(18), pairs_to_cover(res.matrix))


def test_pairs_search_timeout_and_odd_n():
    assert pairs_search(20, budget=0.0).status == "timeout"
    with pytest.raises(ValueError):
        pairs_search(7)
