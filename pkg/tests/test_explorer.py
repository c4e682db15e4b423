import json
from itertools import combinations

import pytest

import brute
from rigmat.checkers import is_arm_prop6
from rigmat.errors import CapExceeded
from rigmat.explorer import (Finding, check_closing_corollary, confirm_theorem_2dim,
                             enumerate_matroids, finding_problems, hyperplane_axiom_violation,
                             matroid_from_hyperplanes, search_question, verify_finding)
from rigmat.matroid import cycle_matroid, uniform_matroid
from rigmat.rigidity import generic_rigidity_matroid


def brute_matroid_families(size, rank):
    cands = list(combinations(range(size), rank))
    out = set()
    for f in range(1, 1 << len(cands)):
        fam = [cands[i] for i in range(len(cands)) if f >> i & 1]
        if brute.basis_exchange_ok(fam):
            out.add(frozenset(fam))
    return out


@pytest.mark.parametrize("size,rank", [(3, 1), (4, 2), (5, 2), (5, 3), (4, 3)])
def test_enumeration_matches_brute_force(size, rank):
    got = {frozenset(tuple(B.indices()) for B in M.bases()) for M in enumerate_matroids(size, rank)}
    assert got == brute_matroid_families(size, rank)


def test_enumeration_limits():
    with pytest.raises(CapExceeded):
        next(enumerate_matroids(11, 2))
    with pytest.raises(CapExceeded):
        next(enumerate_matroids(8, 4))
    with pytest.raises(ValueError):
        next(enumerate_matroids(3, 4))
    with pytest.raises(ValueError):
        next(enumerate_matroids(6, 2, n=3))


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (3, 2)])
def test_confirm_theorem_2dim_small(n, m):
    f = confirm_theorem_2dim(n, m)
    assert f.verdict == "equivalence-confirmed"
    assert f.stats["arm"] == 1
    assert verify_finding(f.to_json())


def test_mutated_criterion_reports_discrepancy_that_does_not_verify():
    f = confirm_theorem_2dim(4, 2, criterion=lambda M, m: True)
    assert f.verdict == "discrepancy"
    # the attached reports come from the real checks, which agree with each other
    assert not verify_finding(json.loads(f.dumps()))
    f = confirm_theorem_2dim(4, 2, arm=lambda M, m: False)
    assert f.verdict == "discrepancy" and f.stats["arm"] == 0


def test_hyperplane_round_trip():
    for M in (cycle_matroid(4), generic_rigidity_matroid(4, 2), generic_rigidity_matroid(5, 2),
              uniform_matroid(4, 3)):
        fam = M.hyperplanes().bits()
        assert hyperplane_axiom_violation(fam, M.ground) is None
        back = matroid_from_hyperplanes(M.n, fam, M.ground)
        assert (back.rank_table() == M.rank_table()).all()


def test_incomplete_hyperplane_family_is_rejected():
    M = cycle_matroid(4)
    fam = M.hyperplanes().bits()[1:]
    bad = hyperplane_axiom_violation(fam, M.ground)
    assert bad is not None
    base, missing = bad
    assert all(base & ~h or (base | missing) & ~h for h in fam)
    assert matroid_from_hyperplanes(4, fam, M.ground) is None


def test_exhaustive_question_at_four_vertices():
    f = search_question(4, 2, budget=1000, seed=0)
    assert f.verdict == "exhausted-no-counterexample"
    assert f.stats["pool"] <= 16 and f.stats["complete"]
    assert verify_finding(f.to_json())


def test_closing_corollary_at_four_vertices():
    f = check_closing_corollary(4, 2, budget=1000, seed=1)
    assert f.verdict == "exhausted-no-counterexample" and f.mode == "closing-corollary"


def test_randomized_search_is_seeded():
    a = search_question(5, 2, budget=5, seed=9)
    b = search_question(5, 2, budget=5, seed=9)
    assert a.dumps() == b.dumps()
    assert a.verdict == "budget-exhausted" and a.stats["tested"] == 5
    assert verify_finding(a.to_json())


def test_search_argument_checks():
    with pytest.raises(ValueError):
        search_question(3, 2)
    with pytest.raises(ValueError):
        search_question(4, 2, budget=0)
    with pytest.raises(ValueError):
        confirm_theorem_2dim(2, 2)


def test_finding_json():
    G = generic_rigidity_matroid(4, 2)
    f = Finding("budget-exhausted", 4, 2, seed=3, budget=7, matroid=G.to_json(),
                reports=[is_arm_prop6(G, 2)], stats={"tested": 7})
    data = json.loads(f.dumps())
    assert list(data) == ["verdict", "mode", "n", "m", "seed", "budget", "matroid", "reports", "stats"]
    assert Finding.from_json(data).dumps() == f.dumps()
    with pytest.raises(ValueError):
        Finding("maybe", 4, 2)


def test_finding_problems_are_named():
    assert finding_problems(Finding("counterexample", 4, 2)) == ["verdict counterexample carries no matroid"]
    broken = Finding("counterexample", 4, 2, matroid={"kind": "bases", "n": 4, "bases": []}).to_json()
    assert not verify_finding(broken)
