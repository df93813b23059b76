from fractions import Fraction

import pytest

from grasscoh.exact_linalg import RationalMatrix, det, solve
from grasscoh.lefschetz import (
    check_ax_equals_b,
    check_e_schur_triangular,
    check_hard_lefschetz,
    check_section4_invertible,
    e_schur_transition,
    identity_solution,
    lefschetz_matrix,
    section4_indices,
    section4_matrix,
    section4_matrix_dual,
    section4_rhs,
)


def test_lefschetz_2x2():
    assert lefschetz_matrix(2, 2, 0) == RationalMatrix([[2]])
    assert lefschetz_matrix(2, 2, 1) == RationalMatrix([[2]])
    assert lefschetz_matrix(2, 2, 2) == RationalMatrix.identity(2)


@pytest.mark.parametrize("k,l", [(1, 1), (1, 5), (2, 3), (3, 3), (2, 4)])
def test_hard_lefschetz_small(k, l):
    assert check_hard_lefschetz(k, l).holds
    for i in range(k * l // 2 + 1):
        assert det(lefschetz_matrix(k, l, i)) != 0


def test_section4_2x2():
    assert section4_indices(2, 2, 2) == [(1, 1), (2,)]
    a = section4_matrix(2, 2, 2)
    assert a == RationalMatrix([[1, 1], [1, 0]])
    assert section4_rhs(2, 2, 2) == [1, 1]
    assert solve(a, [1, 1]) == [1, 0]
    assert identity_solution(2, 2, 2) == [1, 0]


@pytest.mark.parametrize("k,l,m", [(2, 2, 1), (2, 3, 2), (3, 3, 2), (3, 3, 3), (3, 4, 3)])
def test_ax_equals_b(k, l, m):
    rep = check_ax_equals_b(k, l, m)
    assert rep.holds
    x = rep.details["solution"]
    basis = section4_indices(k, l, m)
    assert x == [Fraction(1 if mu == (1,) * m else 0) for mu in basis]


@pytest.mark.parametrize("k,l,m", [(2, 2, 2), (3, 3, 2), (3, 3, 3)])
def test_row_indicator_is_not_a_solution(k, l, m):
    # the indicator of the one-row shape (m) does not satisfy the system once m >= 2
    a = section4_matrix(k, l, m)
    b = section4_rhs(k, l, m)
    row = [Fraction(1 if mu == (m,) else 0) for mu in section4_indices(k, l, m)]
    assert a.apply(row) != b


@pytest.mark.parametrize("k,l,m", [(2, 3, 2), (3, 3, 3), (2, 4, 2)])
def test_duality_cross_check(k, l, m):
    assert section4_matrix(k, l, m) == section4_matrix_dual(k, l, m)
    assert check_section4_invertible(k, l, m).holds


def test_section4_preconditions():
    with pytest.raises(ValueError):
        section4_matrix(2, 2, 3)
    assert check_ax_equals_b(1, 1, 1).verdict == "not-applicable"


def test_e_schur_transition_4():
    idx, t = e_schur_transition(4, 4, 4)
    for r in range(len(idx)):
        assert t[r, r] == 1
        for c in range(r + 1, len(idx)):
            assert t[r, c] == 0


@pytest.mark.parametrize("k,l", [(2, 2), (3, 3), (3, 4)])
def test_triangularity(k, l):
    for m in range(k * l + 1):
        assert check_e_schur_triangular(k, l, m).holds
