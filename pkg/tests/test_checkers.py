from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from rigmat.checkers import (SUITES, arm_verdicts, check_bottom, check_C, check_C1, check_C2,
                             check_connect, check_extension_lemma, check_H, check_hm_subset,
                             check_laman_independent, check_theorem_2dim, check_twoparts,
                             is_arm_prop6, is_rigid, laman_check,
                             recheck_violation, run_suite)
from rigmat.edges import EdgeSet, complete_mask, vmask
from rigmat.errors import CapExceeded, PreconditionNotMet
from rigmat.explorer import enumerate_matroids
from rigmat.matroid import cycle_matroid, free_matroid, matroid_from_json, restriction, uniform_matroid
from rigmat.reports import AxiomReport, Scope
from rigmat.rigidity import generic_rigidity_matroid

RANK5_K4 = list(enumerate_matroids(6, 5, 4))
RANK2_K3 = list(enumerate_matroids(3, 2, 3))
RANK3_K4 = list(enumerate_matroids(6, 3, 4))


def test_generic_plane_matroid_on_k4_is_u56():
    G = generic_rigidity_matroid(4, 2)
    assert G.r == 5 and len(G.bases()) == 6
    assert is_arm_prop6(G, 2).passed


def test_u46_fails_every_prop6_part():
    rep = is_arm_prop6(uniform_matroid(4, 4), 2)
    assert not rep.passed
    assert (rep.details["i"], rep.details["ii"], rep.details["iii"]) == (False, False, False)
    assert not rep.details["two_of_three"]


def test_cycle_matroid_is_the_line_arm():
    for n in range(2, 6):
        assert set(arm_verdicts(cycle_matroid(n), 1).values()) == {True}
    assert not is_arm_prop6(cycle_matroid(4), 2).passed


def test_wrong_dimension_probes():
    G = generic_rigidity_matroid(5, 2)
    assert check_C1(G, 2).passed and check_C2(G, 2).passed
    assert not check_C1(G, 3).passed
    assert check_C2(G, 3).passed    # a larger overlap only weakens C2
    assert not check_C2(G, 1).passed


def test_hm_strict_at_four_and_six_vertices():
    rep = check_hm_subset(generic_rigidity_matroid(4, 2), 2)
    assert rep.passed and rep.details["strict"]
    assert (rep.details["hm_count"], rep.details["hyperplane_count"]) == (12, 15)
    rep = check_hm_subset(generic_rigidity_matroid(6, 2), 2)
    assert (rep.details["hm_count"], rep.details["hyperplane_count"]) == (90, 1635)


@pytest.mark.parametrize("n,m", [(4, 1), (5, 2), (5, 3), (6, 2)])
def test_generic_passes_the_lemmas(n, m):
    G = generic_rigidity_matroid(n, m)
    for suite in ("laman", "ext", "twoparts", "bottom", "2dim"):
        rep = run_suite(suite, G, m)
        assert rep.passed, (suite, rep.violations[:2])
    assert check_theorem_2dim(G, m).details["agrees"]


def test_run_suite_knows_every_suite():
    G = generic_rigidity_matroid(4, 2)
    for s in SUITES:
        assert run_suite(s, G, 2).suite == s
    with pytest.raises(ValueError):
        run_suite("nope", G, 2)


# -- routes agree on every small matroid ----------------------------------------------

@pytest.mark.parametrize("M", RANK5_K4 + RANK2_K3 + [free_matroid(4)], ids=repr)
def test_routes_agree_exhaustively(M):
    m = {5: 2, 2: 1, 6: 3}[M.r]
    verdicts = arm_verdicts(M, m)
    assert len(set(verdicts.values())) == 1, verdicts
    p = is_arm_prop6(M, m)
    assert not p.details["inconsistent"]
    # any two of the three parts already force membership
    assert p.details["two_of_three"] == p.passed


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(RANK3_K4))
def test_routes_agree_on_rank3_matroids_over_k4(M):
    verdicts = arm_verdicts(M, 1)
    assert len(set(verdicts.values())) == 1, verdicts
    assert verdicts["prop6"] == (M.rank_table().tolist() == cycle_matroid(4).rank_table().tolist())


def test_only_the_generic_matroids_are_arms():
    assert sum(is_arm_prop6(M, 2).passed for M in RANK5_K4) == 1
    assert sum(is_arm_prop6(M, 1).passed for M in RANK3_K4) == 1


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(RANK5_K4))
def test_route_H_implies_C1_and_hm(M):
    if check_H(M, 2).passed:
        assert check_C1(M, 2).passed
        assert check_hm_subset(M, 2).passed


@pytest.mark.parametrize("n,m", [(5, 2), (5, 3), (6, 2)])
def test_membership_is_inherited_by_complete_restrictions(n, m):
    G = generic_rigidity_matroid(n, m)
    for k in range(m + 1, n):
        for X in combinations(range(n), k):
            R = restriction(G, complete_mask(vmask(X), n))
            assert is_arm_prop6(R, m).passed, X


# -- witnesses are independently re-checkable ----------------------------------------------

FAILING = [
    (uniform_matroid(4, 4), 2, "prop6"), (uniform_matroid(4, 4), 2, "D"),
    (uniform_matroid(4, 4), 2, "H"), (uniform_matroid(4, 4), 2, "B"),
    (uniform_matroid(4, 4), 2, "Z"), (uniform_matroid(4, 4), 2, "C"),
    (generic_rigidity_matroid(5, 2), 3, "C"), (generic_rigidity_matroid(5, 2), 1, "C"),
    (cycle_matroid(5), 2, "2dim"), (cycle_matroid(5), 2, "hm"), (cycle_matroid(5), 2, "C"),
    (cycle_matroid(5), 2, "connect"), (uniform_matroid(4, 0), 2, "bottom"),
    (free_matroid(5), 2, "laman"),
]


@pytest.mark.parametrize("M,m,suite", FAILING, ids=lambda x: repr(x))
def test_every_witness_rechecks(M, m, suite):
    rep = run_suite(suite, M, m)
    assert not rep.passed and rep.violations
    for v in rep.violations:
        assert recheck_violation(M, m, v), v
    # the JSON form keeps witnesses usable
    for v in AxiomReport.from_json(rep.to_json()).violations:
        assert recheck_violation(M, m, v), v


def test_connect_failure_on_a_cut_vertex():
    # two triangles glued at a vertex span K_5 in the cycle matroid, but are not 2-connected
    C = cycle_matroid(5)
    rep = check_connect(C, 2, max_witnesses=None)
    bowtie = EdgeSet.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert is_rigid(C, bowtie) and not rep.passed
    assert any(v["E"] == bowtie and v["cut"] == frozenset({2}) for v in rep.violations)


def test_recheck_rejects_fabricated_witnesses():
    G = generic_rigidity_matroid(5, 2)
    K4 = EdgeSet(5, complete_mask(vmask([0, 1, 2, 3]), 5))
    assert not recheck_violation(G, 2, {"kind": "not_circuit", "set": K4})
    assert not recheck_violation(G, 2, {"kind": "bottom", "V": [0, 1]})
    with pytest.raises(ValueError):
        recheck_violation(G, 2, {"kind": "mystery"})


# -- preconditions, scopes and caps ------------------------------------------------

def test_extension_lemma_needs_cocircuit_stars():
    with pytest.raises(PreconditionNotMet):
        check_extension_lemma(uniform_matroid(4, 4), 2)


def test_twoparts_needs_closed_hm1():
    with pytest.raises(PreconditionNotMet):
        check_twoparts(uniform_matroid(4, 4), 2)


def test_bottom_precondition_is_recorded_or_enforced():
    L = uniform_matroid(4, 0)
    rep = check_bottom(L, 2)
    assert not rep.passed and len(rep.violations) == 6
    assert all(len(v["circuit"]) == 1 for v in rep.violations)
    U = uniform_matroid(4, 4)
    assert check_bottom(U, 2).details["precondition"] is False
    with pytest.raises(PreconditionNotMet):
        check_bottom(U, 2, require_precondition=True)


def test_scope_rules():
    G6 = generic_rigidity_matroid(6, 2)
    with pytest.raises(CapExceeded):
        check_connect(G6, 2, Scope.exhaustive())
    assert check_connect(G6, 2).scope == "sampled(seed=0, count=2000)"
    a = check_C(G6, 2, Scope.sampled(200, 5)).to_json()
    assert a == check_C(G6, 2, Scope.sampled(200, 5)).to_json()
    with pytest.raises(ValueError):
        Scope.parse("sampled:10")
    assert Scope.parse("sampled:10", seed=1) == Scope.sampled(10, 1)


def test_dimension_guards():
    with pytest.raises(ValueError):
        is_arm_prop6(generic_rigidity_matroid(4, 2), 0)
    with pytest.raises(ValueError):
        is_arm_prop6(generic_rigidity_matroid(4, 2), 4)


def test_witness_cap_counts_everything():
    rep = check_C(cycle_matroid(5), 2, max_witnesses=3)
    assert len(rep.violations) == 3 and rep.details["violation_count"] > 3


def test_report_consistency_is_enforced():
    with pytest.raises(ValueError):
        AxiomReport("x", True, [{"kind": "k"}])


# -- Laman ----------------------------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(st.integers(0, (1 << 10) - 1), st.integers(1, 3))
def test_laman_matches_brute_force(bits, m):
    E = EdgeSet(5, bits)
    assert laman_check(E, m).passed == brute.laman_ok(list(E.edges()), m)


def test_laman_holds_on_generic_bases_and_caps():
    assert check_laman_independent(generic_rigidity_matroid(5, 2), 2).passed
    big = EdgeSet.from_edges(18, [(i, i + 1) for i in range(17)])
    with pytest.raises(CapExceeded):
        laman_check(big, 2)


def test_json_matroid_survives_checks():
    G = generic_rigidity_matroid(5, 2)
    back = matroid_from_json(G.to_json())
    assert arm_verdicts(back, 2) == arm_verdicts(G, 2)
