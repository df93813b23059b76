"""Standard Young tableau counts."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

DEFAULT_BRUTE_FORCE_BOUND = 12


def hook_lengths(lam) -> list:
    conj = [sum(1 for p in lam if p > c) for c in range(lam[0])] if lam else []
    return [
        [(lam[r] - c - 1) + (conj[c] - r - 1) + 1 for c in range(lam[r])]
        for r in range(len(lam))
    ]


def hook_length_f(lam) -> int:
    """Number of standard Young tableaux of shape ``lam``."""
    n = sum(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    f, rem = divmod(factorial(n), prod)
    assert rem == 0, f"hook product {prod} does not divide {n}!"
    return f


def brute_force_syt(lam, bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> int:
    """Count SYT by placing 1..n one at a time into outer corners.

    Independent of the hook formula: every filling is actually built.
    """
    lam = tuple(lam)
    if sum(lam) > bound:
        raise ValueError(f"|lambda| = {sum(lam)} exceeds brute-force bound {bound}")
    n = sum(lam)
    rows = len(lam)
    filling = [[0] * p for p in lam]
    count = 0

    def place(v, shape):
        nonlocal count
        if v > n:
            count += 1
            return
        for r in range(rows):
            c = shape[r]
            if c >= lam[r]:
                continue
            if r > 0 and shape[r - 1] <= c:
                continue
            filling[r][c] = v
            shape[r] += 1
            # row increase holds since cells fill left to right with growing v
            assert c == 0 or filling[r][c - 1] < v
            assert r == 0 or filling[r - 1][c] < v
            place(v + 1, shape)
            shape[r] -= 1
            filling[r][c] = 0

    place(1, [0] * rows)
    return count


@lru_cache(maxsize=None)
def f_cached(lam: tuple) -> int:
    return hook_length_f(lam)
