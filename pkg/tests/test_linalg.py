from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rigmat.errors import ResidueMismatch
from rigmat.linalg import Echelon, exact_rank, integer_rows, modular_rank, random_prime, reduce_mod
from rigmat.matroid import from_matrix

matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                                min_size=c, max_size=c), min_size=0, max_size=7))


@settings(max_examples=150)
@given(matrices)
def test_exact_rank_matches_sympy(rows):
    want = sympy.Matrix(rows).rank() if rows else 0
    assert exact_rank(rows) == want


@settings(max_examples=150)
@given(matrices)
def test_modular_rank_matches_exact(rows):
    p = random_prime(11)
    assert modular_rank(reduce_mod(rows, p), p) == exact_rank(rows)


def test_integer_rows_scale_by_denominators():
    assert integer_rows([[Fraction(1, 2), Fraction(1, 3)]]) == [[3, 2]]


def test_random_prime_is_seeded_and_large():
    p = random_prime(5)
    assert p == random_prime(5) and sympy.isprime(p) and p.bit_length() >= 62


def test_echelon_is_persistent():
    p = 101
    base = Echelon(p)
    one = base.extended([1, 0])
    assert len(base) == 0 and len(one) == 1
    assert one.extended([2, 0]) is None
    assert len(one.extended([0, 3])) == 2


def test_residue_mismatch_is_detected():
    # an entry equal to the working prime vanishes modulo it but not over Q
    seed = 3
    p = random_prime(seed)
    M = from_matrix(2, [[p]], seed=seed)
    with pytest.raises(ResidueMismatch):
        M.rank_table()
