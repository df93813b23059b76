"""Oracle cross-checks at desk scale, run by ``grasscoh selftest``."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .endo import binomial_expansion_check, gamma_formula_check, solve_lemma_m2, residual_closed_form
from .filtration import degree_rank, degree_rank_via_jacobi_trudi
from .lefschetz import check_e_schur_triangular, check_hard_lefschetz, check_section4_invertible
from .partitions import (
    complement_in_box,
    conjugate,
    enumerate_in_box,
    partitions_of,
    prop5_compose,
    prop5_decompose,
)
from .qseries import (
    QPoly,
    conj1_rhs,
    conj1_rhs_via_f,
    geometric,
    grassmannian_hilb,
    prop5_check,
    qbinomial,
)
from .schur_ring import (
    BoxContext,
    e,
    e1_power,
    e_monomial,
    e_monomial_untruncated_then_cut,
    h,
    jacobi_trudi_h,
    multiply,
    multiply_via_jacobi_trudi,
    schur,
    top_coefficient,
)
from .tableaux import brute_force_syt, hook_length_f


def _boxes(limit_area: int, k_max: int = 8, l_max: int = 8):
    for k in range(1, k_max + 1):
        for l in range(1, l_max + 1):
            if k * l <= limit_area:
                yield k, l


def prop5_roundtrip() -> bool:
    for k in range(1, 5):
        for l in range(1, 5):
            for lam in enumerate_in_box((k, l))[1:]:
                dec = prop5_decompose(lam, (k, l))
                if prop5_compose(dec, (k, l)) != lam or dec.weight((k, l)) != sum(lam):
                    return False
    return True


def gaussian_counts() -> bool:
    for k in range(1, 6):
        for l in range(1, 6):
            counts: dict = {}
            for lam in enumerate_in_box((k, l)):
                counts[sum(lam)] = counts.get(sum(lam), 0) + 1
            if QPoly(counts) != grassmannian_hilb(k, l):
                return False
    return True


def q_identities() -> bool:
    for k in range(1, 6):
        for l in range(1, 6):
            if not prop5_check(k, l).holds:
                return False
            if conj1_rhs(k, l, 1) != geometric(k * l) or conj1_rhs(k, l, k) != qbinomial(k + l, k):
                return False
            if k <= l and any(conj1_rhs_via_f(k, l, m) != conj1_rhs(k, l, m) for m in range(k + 1)):
                return False
    return True


def hook_vs_brute() -> bool:
    for n in range(7):
        parts = partitions_of(n)
        if any(hook_length_f(p) != brute_force_syt(p) for p in parts):
            return False
        if sum(hook_length_f(p) ** 2 for p in parts) != factorial(n):
            return False
    return True


def lr_vs_jacobi_trudi() -> bool:
    for k in range(1, 4):
        for l in range(1, 4):
            ctx = BoxContext(k, l)
            small = [p for p in enumerate_in_box((k, l)) if sum(p) <= 3]
            for a in small:
                for b in small:
                    x, y = schur(ctx, a), schur(ctx, b)
                    if multiply(x, y) != multiply_via_jacobi_trudi(x, y):
                        return False
    return True


def truncation_consistency() -> bool:
    for k in range(1, 4):
        for l in range(1, 4):
            ctx = BoxContext(k, l)
            for n in range(5):
                for lam in partitions_of(n):
                    if e_monomial(ctx, lam) != e_monomial_untruncated_then_cut(ctx, lam):
                        return False
    return True


def poincare_pairing() -> bool:
    for k, l in [(2, 2), (2, 3), (3, 3)]:
        ctx = BoxContext(k, l)
        box = enumerate_in_box((k, l))
        for a in box:
            for b in box:
                if sum(a) + sum(b) != k * l:
                    continue
                want = 1 if b == complement_in_box(a, (k, l)) else 0
                if top_coefficient(multiply(schur(ctx, a), schur(ctx, b))) != want:
                    return False
    return True


def e1_top_power() -> bool:
    for k, l in _boxes(9):
        ctx = BoxContext(k, l)
        top = e1_power(ctx, k * l)
        if top.terms != {ctx.top: hook_length_f(ctx.top)}:
            return False
        if not e1_power(ctx, 1, top).is_zero():
            return False
    return True


def jacobi_trudi_relations() -> bool:
    for k, l in _boxes(9, 3, 3):
        ctx = BoxContext(k, l)
        for r in range(1, k + l + 1):
            want = h(ctx, r) if r <= l else e(ctx, 0) * 0
            if jacobi_trudi_h(ctx, r) != want:
                return False
    return True


def spanning_rank_oracle() -> bool:
    for k, l in [(2, 2), (2, 3), (3, 3)]:
        for m in range(k + 1):
            for d in range(k * l + 1):
                if degree_rank(k, l, d, m) != degree_rank_via_jacobi_trudi(k, l, d, m):
                    return False
    return True


def lefschetz_small() -> bool:
    return all(check_hard_lefschetz(k, l).holds for k, l in _boxes(9))


def section4_small() -> bool:
    for k, l in _boxes(9):
        for m in range(1, k + 1):
            if k * l >= 2 * m and not check_section4_invertible(k, l, m).holds:
                return False
    return all(check_e_schur_triangular(k, l, m).holds
               for k, l in _boxes(9) for m in range(min(4, k * l + 1)))


def lemma_small() -> bool:
    for k, l in [(2, 3), (3, 3), (2, 4)]:
        res = solve_lemma_m2(k, l)
        if res.residual_r3 != residual_closed_form(k, l):
            return False
        y = Fraction((k - 1) * (l + 1), k * l - 1)
        if not binomial_expansion_check(k, l, 3, -1, y):
            return False
    return all(gamma_formula_check(k, l).holds for k, l in _boxes(9) if k * l >= 2)


def involutions() -> bool:
    for k in range(1, 4):
        for l in range(1, 4):
            for lam in enumerate_in_box((k, l)):
                if conjugate(conjugate(lam)) != lam:
                    return False
                if complement_in_box(complement_in_box(lam, (k, l)), (k, l)) != lam:
                    return False
    return len(enumerate_in_box((3, 4))) == comb(7, 3)


CHECKS = [
    ("partition involutions", involutions),
    ("prop5 bijection roundtrip", prop5_roundtrip),
    ("gaussian binomial vs box count", gaussian_counts),
    ("q-series identities", q_identities),
    ("hook length vs brute force", hook_vs_brute),
    ("LR vs Jacobi-Trudi product", lr_vs_jacobi_trudi),
    ("truncation consistency", truncation_consistency),
    ("Poincare pairing", poincare_pairing),
    ("e_1 top power", e1_top_power),
    ("Jacobi-Trudi h relations", jacobi_trudi_relations),
    ("spanning rank: vertical vs horizontal Pieri", spanning_rank_oracle),
    ("Hard Lefschetz", lefschetz_small),
    ("degree-m system and triangularity", section4_small),
    ("lemma m=2 pipeline", lemma_small),
]


def run_selftest(emit=print) -> bool:
    ok = True
    for name, fn in CHECKS:
        passed = bool(fn())
        ok &= passed
        emit(f"{'PASS' if passed else 'FAIL'}  {name}")
    return ok
