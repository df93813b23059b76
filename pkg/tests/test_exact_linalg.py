from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from grasscoh.exact_linalg import (
    INCONSISTENT,
    UNDERDETERMINED,
    RationalMatrix,
    det,
    in_span,
    inverse,
    rank,
    solve,
)


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction((-1) ** inv)
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def matrices(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(1, max_n).flatmap(
            lambda m: st.lists(st.lists(st.integers(-4, 4), min_size=m, max_size=m), min_size=n, max_size=n)
        )
    )


def square(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_rank_examples():
    assert rank(RationalMatrix([[1, 2], [2, 4]])) == 1
    assert rank(RationalMatrix([[1, 0], [0, 1]])) == 2
    assert rank(RationalMatrix([[0, 0, 0]])) == 0
    assert rank(RationalMatrix([[1, 2, 3], [4, 5, 6]])) == 2


def test_solve_examples():
    m = RationalMatrix([[2, 1], [1, 3]])
    assert solve(m, [3, 4]) == [Fraction(1), Fraction(1)]
    assert solve(RationalMatrix([[1, 1], [2, 2]]), [1, 3]) == INCONSISTENT
    assert solve(RationalMatrix([[1, 1], [2, 2]]), [1, 2]) == UNDERDETERMINED


def test_inverse_and_det():
    m = RationalMatrix([[1, 1], [1, 0]])
    assert inverse(m) == RationalMatrix([[0, 1], [1, -1]])
    assert det(m) == -1
    assert inverse(RationalMatrix([[1, 2], [2, 4]])) is None
    assert det(RationalMatrix.identity(3)) == 1


def test_in_span():
    res = in_span([[1, 0, 1], [0, 1, 1]], [2, 3, 5])
    assert res and list(res.coefficients) == [2, 3]
    assert not in_span([[1, 0, 1]], [0, 1, 0])
    assert in_span([], [0, 0])
    assert not in_span([], [1, 0])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_of_transpose(rows):
    m = RationalMatrix(rows)
    assert rank(m) == rank(m.transpose())
    assert rank(m) <= min(m.shape)


@settings(max_examples=60, deadline=None)
@given(square())
def test_det_matches_leibniz_and_inverse(rows):
    m = RationalMatrix(rows)
    d = det(m)
    assert d == leibniz_det(rows)
    inv = inverse(m)
    if d == 0:
        assert inv is None
        assert rank(m) < len(rows)
    else:
        assert m @ inv == RationalMatrix.identity(len(rows))
        b = list(range(len(rows)))
        x = solve(m, b)
        assert m.apply(x) == [Fraction(v) for v in b]


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_in_span_certificate(rows, coeffs):
    target = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(len(rows[0]))]
    res = in_span(rows, target)
    assert res
    assert [sum(c * r[j] for c, r in zip(res.coefficients, rows)) for j in range(len(target))] == target
