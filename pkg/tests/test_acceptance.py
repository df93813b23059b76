"""Acceptance criteria, one test each, exact arithmetic throughout."""

import time
from fractions import Fraction
from math import factorial

import pytest

from grasscoh.endo import (
    gamma_formula_check,
    residual_closed_form,
    residual_r3,
    solve_lemma_m2,
    verify_h2_branch,
)
from grasscoh.exact_linalg import inverse
from grasscoh.filtration import check_conj1
from grasscoh.lefschetz import (
    check_ax_equals_b,
    check_hard_lefschetz,
    check_section4_invertible,
    section4_indices,
    section4_matrix,
)
from grasscoh.partitions import complement_in_box, enumerate_in_box, partitions_of, prop5_compose, prop5_decompose
from grasscoh.qseries import QPoly, conj1_rhs, conj1_rhs_via_f, prop5_check, qbinomial
from grasscoh.runner import SweepConfig, SWEEP_CLAIMS, sweep
from grasscoh.schur_ring import (
    BoxContext,
    e1_power,
    e_monomial,
    multiply,
    multiply_via_jacobi_trudi,
    schur,
    top_coefficient,
)
from grasscoh.tableaux import brute_force_syt, hook_length_f


def boxes_with_area_at_most(n):
    return [(k, l) for k in range(1, n + 1) for l in range(1, n + 1) if k * l <= n]


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


@pytest.mark.acceptance("1 q-identity for every box up to 8x8")
def test_c1_prop5_identity():
    with Timer() as t:
        reports = [prop5_check(k, l) for k in range(1, 9) for l in range(1, 9)]
    assert len(reports) == 64
    assert all(r.verdict == "holds" for r in reports)
    assert t.seconds < 5


@pytest.mark.acceptance("2 bijection roundtrip and class counts up to 8x8")
def test_c2_bijection():
    with Timer() as t:
        for k in range(1, 9):
            for l in range(1, 9):
                counts = {}
                for lam in enumerate_in_box((k, l))[1:]:
                    dec = prop5_decompose(lam, (k, l))
                    assert prop5_compose(dec, (k, l)) == lam
                    assert dec.weight((k, l)) == sum(lam)
                    cls = counts.setdefault((dec.i, dec.j), {})
                    cls[sum(lam)] = cls.get(sum(lam), 0) + 1
                expected = {}
                for i in range(1, min(k, l) + 1):
                    for j in range(k - i + 1):
                        factor = (qbinomial(l, i) * qbinomial(i + j - 1, j)).shift(i + j * (l - i + 1))
                        expected[i, j] = factor.coefficients()
                assert counts == expected, (k, l)
    assert t.seconds < 30


@pytest.mark.acceptance("3 classical Hilbert series against enumeration")
def test_c3_classical_hilbert():
    for k in range(1, 7):
        for l in range(1, 7):
            counts = {}
            for lam in enumerate_in_box((k, l)):
                counts[sum(lam)] = counts.get(sum(lam), 0) + 1
            qb = qbinomial(k + l, k)
            for d in range(k * l + 2):
                assert qb[d] == counts.get(d, 0), (k, l, d)


@pytest.mark.acceptance("4 boundary filtration cases m=1 and m=k")
def test_c4_conj1_boundaries():
    with Timer() as t:
        for k, l in boxes_with_area_at_most(20):
            for m in sorted({1, k}):
                rep = check_conj1(k, l, m)
                assert rep.verdict == "holds", rep.to_dict()
    assert t.seconds < 120


@pytest.mark.acceptance("5 interior sweep k<=4, k<=l<=5, all m")
def test_c5_sweep():
    cfg = SweepConfig(k_max=4, l_max=5, claims=SWEEP_CLAIMS, cache=None, timing=False)
    with Timer() as t:
        result = sweep(cfg)
    failures = [r.to_dict() for r in result.reports if r.failed]
    assert failures == []
    assert all(r.verdict in ("holds", "not-applicable") for r in result.reports)
    applicable = {r.key for r in result.reports if r.verdict == "holds"}
    for k in range(1, 5):
        for l in range(k, 6):
            for m in range(0, k + 1):
                assert ("conj1", k, l, m) in applicable
    by_key = {r.key: r.verdict for r in result.reports}
    both = 0
    for (claim, k, l, m), verdict in by_key.items():
        if claim == "conj4" and verdict != "not-applicable":
            other = by_key[("conj4prime", k, l, m)]
            assert other == verdict, (k, l, m)
            both += 1
    assert both > 0
    assert t.seconds < 600


@pytest.mark.acceptance("6 alternate recurrence equals the double sum")
def test_c6_recurrence_equivalence():
    for l in range(1, 9):
        for k in range(1, l + 1):
            for m in range(k + 1):
                assert conj1_rhs_via_f(k, l, m) == conj1_rhs(k, l, m)


@pytest.mark.acceptance("7 hook length oracle")
def test_c7_hook_length():
    for n in range(9):
        parts = partitions_of(n)
        for lam in parts:
            assert hook_length_f(lam) == brute_force_syt(lam)
        assert sum(hook_length_f(lam) ** 2 for lam in parts) == factorial(n)


@pytest.mark.acceptance("8 ring oracles: LR vs Jacobi-Trudi, pairing, e_1 powers")
def test_c8_ring_oracles():
    for k in range(1, 4):
        for l in range(1, 4):
            ctx = BoxContext(k, l)
            small = [p for p in enumerate_in_box((k, l)) if sum(p) <= 4]
            for a in small:
                for b in small:
                    x, y = schur(ctx, a), schur(ctx, b)
                    assert multiply(x, y) == multiply_via_jacobi_trudi(x, y), (k, l, a, b)
    for k in range(1, 4):
        for l in range(1, 5):
            ctx = BoxContext(k, l)
            box = enumerate_in_box((k, l))
            for a in box:
                for b in box:
                    if sum(a) + sum(b) != k * l:
                        continue
                    want = 1 if b == complement_in_box(a, (k, l)) else 0
                    assert top_coefficient(multiply(schur(ctx, a), schur(ctx, b))) == want
    for k, l in boxes_with_area_at_most(16):
        ctx = BoxContext(k, l)
        top = e1_power(ctx, k * l)
        assert top.terms == {ctx.top: hook_length_f(ctx.top)}
        assert e1_power(ctx, 1, top).is_zero()


@pytest.mark.acceptance("9 Hard Lefschetz and the degree-m system")
def test_c9_lefschetz():
    with Timer() as t:
        instances = 0
        for k, l in boxes_with_area_at_most(16):
            assert check_hard_lefschetz(k, l).holds, (k, l)
            for m in range(1, k + 1):
                if k * l < 2 * m:
                    continue
                instances += 1
                assert check_section4_invertible(k, l, m).holds
                assert inverse(section4_matrix(k, l, m)) is not None
                rep = check_ax_equals_b(k, l, m)
                assert rep.holds, rep.to_dict()
                # the unique solution is the Schur coordinate vector of e_m = s_{1^m}
                column = tuple([1] * m)
                assert rep.details["solution"] == [
                    Fraction(1 if mu == column else 0) for mu in section4_indices(k, l, m)
                ]
        assert instances > 0
    assert t.seconds < 300


@pytest.mark.acceptance("10 m=2 pipeline: solutions, residual, h_2 branch")
def test_c10_lemma_pipeline():
    with Timer() as t:
        for k in range(2, 6):
            for l in range(k, 6):
                if k * l < 6:
                    continue
                res = solve_lemma_m2(k, l)
                want = sorted({(Fraction(1), Fraction(0)),
                               (Fraction(-1), Fraction((k - 1) * (l + 1), k * l - 1))})
                assert sorted(res.solutions) == want
                assert res.residual_r3 == residual_closed_form(k, l)
                assert (res.residual_r3 == 0) == (k == l)
                if k == l:
                    assert (Fraction(-1), Fraction(1)) in res.solutions
                    assert verify_h2_branch(k).holds
        assert residual_r3(2, 3) == Fraction(-11, 125)
    assert t.seconds < 60


@pytest.mark.acceptance("11 gamma sums and the e_2^3 pattern")
def test_c11_gamma():
    for k, l in boxes_with_area_at_most(16):
        if k * l >= 2:
            assert gamma_formula_check(k, l).holds, (k, l)
    cube = e_monomial(BoxContext(6, 3), (2, 2, 2))
    pattern = [cube.terms[p] for p in [(1,) * 6, (2, 1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2),
                                       (3, 1, 1, 1), (3, 2, 1), (3, 3)]]
    assert pattern == [1, 2, 3, 1, 1, 2, 1]
    assert len(cube.terms) == 7
