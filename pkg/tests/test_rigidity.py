from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

import brute
from rigmat import rigidity
from rigmat.edges import EdgeSet, complete_mask, vmask
from rigmat.errors import GenericityNotCertified
from rigmat.rigidity import (Embedding, generic_embedding, generic_rigidity_matroid,
                             genericity_failures, rank_formula, rigidity_matrix, rigidity_matroid)


def test_rank_formula_small_values():
    assert [rank_formula(k, 2) for k in range(7)] == [0, 0, 1, 3, 5, 7, 9]
    assert [rank_formula(k, 1) for k in range(5)] == [0, 0, 1, 2, 3]
    assert rank_formula(4, 3) == 6


def test_generic_5_2_circuits_by_sympy():
    # independent embedding with independent ranks: any generic placement gives the same matroid
    rank = brute.RowRank(brute.rigidity_rows(brute.random_points(5, 2, seed=7)))
    circuits = brute.circuits(rank, range(10))
    assert len(circuits) == 20
    M = generic_rigidity_matroid(5, 2)
    assert {frozenset(C.indices()) for C in M.circuits()} == set(circuits)


@pytest.mark.parametrize("n,m", [(4, 2), (4, 3), (5, 1), (5, 3)])
def test_rank_table_matches_independent_embedding(n, m):
    rank = brute.RowRank(brute.rigidity_rows(brute.random_points(n, m, seed=n * 10 + m)))
    M = generic_rigidity_matroid(n, m)
    for X in brute.subsets(range(comb(n, 2))):
        assert M.rank(EdgeSet.from_indices(n, X)) == rank(X)


def test_rigidity_matrix_layout():
    p = Embedding(3, 2, ((0, 0), (1, 0), (0, 2)))
    R = rigidity_matrix(p)
    assert R.rows[0] == (-1, 1, 0, 0, 0, 0)
    assert R.rows[1] == (0, 0, 0, -2, 0, 2)
    assert R.rank() == 3


def test_special_position_is_not_generic():
    # four collinear points in the plane: K_4 only reaches rank 3
    p = Embedding(4, 2, ((0, 0), (1, 0), (2, 0), (5, 0)))
    M = rigidity_matroid(p)
    assert M.r == 3
    assert frozenset(range(4)) in genericity_failures(M, 2)


def test_embedding_validation():
    with pytest.raises(ValueError):
        Embedding(2, 2, ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        Embedding(2, 2, ((0, 0),))
    with pytest.raises(ValueError):
        Embedding(2, 2, ((0, 0), (1,)))
    with pytest.raises(ValueError):
        Embedding(2, 1, ((0,), (1 << 30,)), bound=10)


def test_embedding_json_round_trip():
    p = Embedding(3, 2, ((Fraction(1, 3), 0), (2, -5), (7, 7)))
    assert Embedding.from_json(p.to_json()) == p
    q = p.restricted([2, 0])
    assert q.coords == ((7, 7), (Fraction(1, 3), 0))


def test_generic_embedding_is_seeded():
    p1, M1 = generic_embedding(5, 2, 4)
    p2, M2 = generic_embedding(5, 2, 4)
    assert p1 == p2 and (M1.rank_table() == M2.rank_table()).all()
    assert not genericity_failures(M1, 2)
    with pytest.raises(ValueError):
        generic_embedding(2, 2, 0)


def test_uncertifiable_draws_raise(monkeypatch):
    collinear = classmethod(lambda cls, n, m, rng, bound=10: cls(n, m, tuple((i, 0) for i in range(n))))
    monkeypatch.setattr(rigidity.Embedding, "random", collinear)
    with pytest.raises(GenericityNotCertified):
        generic_embedding(4, 2, 0)


def test_complete_sets_hit_formula_for_every_seed():
    for seed in range(3):
        M = generic_rigidity_matroid(6, 2, seed)
        for U in combinations(range(6), 5):
            assert M.rank(complete_mask(vmask(U), 6)) == 7
