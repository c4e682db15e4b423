from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from rigmat.edges import (Edge, EdgeSet, bigstar, complete_edges, delta, edge_list, edge_rank,
                          edge_unrank, find_vertex_cut, hm1_family, hm_family,
                          is_k_vertex_connected, num_edges, sorted_family, star, stars_minus,
                          valence, zero_extension)


def edge_sets(max_n=6):
    return st.integers(2, max_n).flatmap(
        lambda n: st.integers(0, (1 << num_edges(n)) - 1).map(lambda b: EdgeSet(n, b)))


def as_frozen(E):
    return frozenset(tuple(e) for e in E.edges())


def test_edge_rank_examples():
    assert edge_rank((0, 1), 4) == 0
    assert edge_rank((2, 3), 4) == 5
    assert edge_list(4)[3] == Edge(1, 2)


@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, num_edges(n) - 1))))
def test_rank_unrank_inverse(args):
    n, i = args
    assert edge_rank(edge_unrank(i, n), n) == i


def test_edge_rank_rejects_noncanonical():
    with pytest.raises(ValueError):
        edge_rank((3, 1), 5)
    with pytest.raises(ValueError):
        edge_rank((1, 5), 5)
    with pytest.raises(ValueError):
        Edge.of(2, 2)


@given(edge_sets())
def test_json_round_trip(E):
    assert EdgeSet.from_json(E.to_json()) == E


@given(edge_sets(5), st.data())
def test_set_algebra_matches_frozensets(E, data):
    F = EdgeSet(E.n, data.draw(st.integers(0, (1 << num_edges(E.n)) - 1)))
    assert as_frozen(E | F) == as_frozen(E) | as_frozen(F)
    assert as_frozen(E & F) == as_frozen(E) & as_frozen(F)
    assert as_frozen(E - F) == as_frozen(E) - as_frozen(F)
    assert (E <= F) == (as_frozen(E) <= as_frozen(F))
    assert E.support() == {v for e in E.edges() for v in e}


def test_mixing_vertex_counts_fails():
    with pytest.raises(ValueError):
        EdgeSet(4, 1) | EdgeSet(5, 1)


@pytest.mark.parametrize("n,m", [(n, m) for m in (1, 2, 3) for n in range(m + 1, 7)])
def test_hm_family_matches_brute_force(n, m):
    got = {as_frozen(H) for H in hm_family(n, m)}
    assert got == brute.two_clique_unions(n, m)


def test_hm_counts():
    assert len(hm_family(5, 2)) == 35
    assert len(hm_family(4, 2)) == 12
    assert len(hm1_family(5, 2)) == 20


@pytest.mark.parametrize("n,m", [(n, m) for m in (1, 2, 3) for n in range(m + 1, 7)])
def test_hm1_inside_hm_and_counted(n, m):
    hm1 = hm1_family(n, m)
    assert set(hm1) <= set(hm_family(n, m))
    # each (v, A) gives a distinct set except when n = m+1, where v and the
    # vertex outside {v} | A swap roles
    expect = n * comb(n - 1, m - 1)
    assert len(hm1) == (expect // 2 if n == m + 1 else expect)


def test_hm_family_rejects_small_vertex_set():
    with pytest.raises(ValueError):
        hm_family(3, 2, vertices=[0])
    with pytest.raises(ValueError):
        hm_family(4, 0)


def test_families_are_canonically_sorted():
    fam = hm_family(5, 2)
    assert fam == sorted_family(fam)
    assert [len(H) for H in fam] == sorted(len(H) for H in fam)


def test_bigstar_size():
    for n in range(3, 7):
        for m in range(1, n):
            for Vp in combinations(range(n), m):
                assert len(bigstar(Vp, n)) == comb(n, 2) - comb(n - m, 2)
    assert len(bigstar([0, 1], 5)) == 7


def test_delta_and_valence():
    D = delta(0, [1], 4)
    assert D == complete_edges([0, 1], 4) | complete_edges([1, 2, 3], 4)
    assert valence(D, 0) == 1 and valence(D, 1) == 3
    with pytest.raises(ValueError):
        delta(0, [0], 4)
    assert len(star(2, 5)) == 4


def test_stars_minus_count():
    for n in range(3, 7):
        for k in range(0, 3):
            left = n - 1 - k
            # a single remaining edge lies in two stars; an empty one in all of them
            expect = {0: 1, 1: comb(n, 2)}.get(left, n * comb(n - 1, k))
            assert len(stars_minus(n, k)) == expect


def test_zero_extension():
    E = EdgeSet.from_edges(5, [(0, 1), (1, 2)])
    X = zero_extension(E, [0, 2], 4)
    assert X == E | EdgeSet.from_edges(5, [(0, 4), (2, 4)])
    with pytest.raises(ValueError):
        zero_extension(E, [3], 4)
    with pytest.raises(ValueError):
        zero_extension(E, [0], 1)


@settings(max_examples=200)
@given(edge_sets(6), st.integers(1, 4))
def test_vertex_connectivity_matches_networkx(E, k):
    if not E:
        with pytest.raises(ValueError):
            is_k_vertex_connected(E, k)
        return
    G = nx.Graph(list(E.edges()))
    want = G.number_of_nodes() >= k + 1 and nx.node_connectivity(G) >= k
    assert is_k_vertex_connected(E, k) == want
    cut = find_vertex_cut(E, k)
    if cut is not None:
        H = G.copy()
        H.remove_nodes_from(cut)
        assert len(cut) < k and not nx.is_connected(H)


def test_two_triangles_sharing_a_vertex_are_not_2_connected():
    E = EdgeSet.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert find_vertex_cut(E, 2) == frozenset({2})
    assert is_k_vertex_connected(E, 1)
