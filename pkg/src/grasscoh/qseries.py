"""Integer polynomials in q and the closed-form Hilbert series.

Everything here stays in exact integer arithmetic; q-binomials come from the
Pascal recurrence rather than from dividing products of ``1 - q^i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Mapping, Optional

from .report import ConjectureReport, timed


class QPoly:
    """Sparse polynomial in q with arbitrary-precision integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        c = {}
        for e, v in (coeffs or {}).items():
            e, v = int(e), int(v)
            if e < 0:
                raise ValueError("negative exponent")
            if v:
                c[e] = c.get(e, 0) + v
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def from_list(cls, coeffs) -> "QPoly":
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def monomial(cls, e: int, v: int = 1) -> "QPoly":
        return cls({e: v})

    @property
    def degree(self) -> Optional[int]:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._c) if self._c else None

    def coefficients(self) -> dict:
        return dict(sorted(self._c.items()))

    def coeff_list(self) -> list:
        if not self._c:
            return []
        return [self._c.get(e, 0) for e in range(self.degree + 1)]

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def at_one(self) -> int:
        return sum(self._c.values())

    def shift(self, n: int) -> "QPoly":
        """Multiply by q^n."""
        return QPoly({e + n: v for e, v in self._c.items()})

    def is_palindromic(self) -> bool:
        if not self._c:
            return True
        lo, hi = min(self._c), self.degree
        return all(self[lo + t] == self[hi - t] for t in range(hi - lo + 1))

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return QPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    def to_json(self) -> dict:
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "QPoly":
        return cls({int(e): v for e, v in obj.items()})

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e, v in sorted(self._c.items()):
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not out:
                out.append(body if v > 0 else f"-{body}")
            else:
                out.append(("+ " if v > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"QPoly({self.coefficients()})"


ONE = QPoly({0: 1})
ZERO = QPoly()


@lru_cache(maxsize=None)
def qbinomial(n: int, r: int) -> QPoly:
    """Gaussian binomial [n choose r]_q."""
    if n < 0 or r < 0:
        raise ValueError("qbinomial needs nonnegative arguments")
    if r > n:
        return ZERO
    if r == 0 or r == n:
        return ONE
    return qbinomial(n - 1, r - 1) + qbinomial(n - 1, r).shift(r)


def grassmannian_hilb(k: int, l: int) -> QPoly:
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    return qbinomial(k + l, k)


def _inner_sum(k: int, l: int, i: int) -> QPoly:
    total = ZERO
    for j in range(k - i + 1):
        total = total + qbinomial(i + j - 1, j).shift(j * (l - i + 1))
    return total


@lru_cache(maxsize=None)
def conj1_rhs(k: int, l: int, m: int) -> QPoly:
    """Predicted Hilbert series of the subalgebra generated by e_1..e_m."""
    if not 0 <= m <= k:
        raise ValueError(f"need 0 <= m <= k, got m={m}, k={k}")
    total = ONE
    # terms with i > l carry the factor [l choose i] = 0
    for i in range(1, min(m, l) + 1):
        total = total + (qbinomial(l, i) * _inner_sum(k, l, i)).shift(i)
    return total


def quotient_hilb_formula(k: int, l: int, p: int) -> QPoly:
    """Closed form for the filtration quotient, carrying q^p twice; see compare_quotient_formula."""
    if not 1 <= p <= k:
        raise ValueError(f"need 1 <= p <= k, got p={p}, k={k}")
    if p > l:
        return ZERO
    inner = ZERO
    for j in range(k - p + 1):
        inner = inner + qbinomial(p + j - 1, j).shift(j * (l - p + 1) + p)
    return inner * qbinomial(l, p).shift(p)


@dataclass(frozen=True)
class QuotientComparison:
    printed: QPoly
    difference: QPoly  # conj1_rhs(p) - conj1_rhs(p - 1)

    @property
    def agree(self) -> bool:
        return self.printed == self.difference

    @property
    def discrepancy(self) -> QPoly:
        return self.printed - self.difference

    def to_json(self) -> dict:
        return {
            "printed": self.printed.to_json(),
            "difference": self.difference.to_json(),
            "agree": self.agree,
            "discrepancy": self.discrepancy.to_json(),
        }


def compare_quotient_formula(k: int, l: int, p: int) -> QuotientComparison:
    return QuotientComparison(
        printed=quotient_hilb_formula(k, l, p),
        difference=conj1_rhs(k, l, p) - conj1_rhs(k, l, p - 1),
    )


def _check_f_range(k: int, l: int, i: int) -> None:
    if not 0 <= i <= k:
        raise ValueError(f"need 0 <= i <= k, got i={i}, k={k}")
    if k > l:
        raise ValueError(f"need k <= l, got k={k}, l={l}")


@lru_cache(maxsize=None)
def _f(k: int, l: int, i: int) -> QPoly:
    if i == 0 or i == k:
        return ONE
    return _f(k - 1, l, i - 1) + _f(k - 1, l, i).shift(l - i + 1)


def f_recurrence(k: int, l: int, i: int) -> QPoly:
    """q-analogue of binom(k, i) from the alternate q-Pascal recurrence."""
    _check_f_range(k, l, i)
    return _f(k, l, i)


def conj1_rhs_via_f(k: int, l: int, m: int) -> QPoly:
    if not 0 <= m <= k:
        raise ValueError(f"need 0 <= m <= k, got m={m}, k={k}")
    _check_f_range(k, l, 0)
    total = ONE
    for i in range(1, m + 1):
        total = total + (qbinomial(l, i) * _f(k, l, i)).shift(i)
    return total


def prop5_rhs(k: int, l: int) -> QPoly:
    total = ONE
    for i in range(1, min(k, l) + 1):
        for j in range(k - i + 1):
            total = total + (qbinomial(l, i) * qbinomial(i + j - 1, j)).shift(i + j * (l - i + 1))
    return total


def prop5_check(k: int, l: int) -> ConjectureReport:
    with timed() as clock:
        lhs = qbinomial(k + l, k)
        rhs = prop5_rhs(k, l)
    witness = None
    if lhs != rhs:
        diff = lhs - rhs
        witness = {"degree": min(diff.coefficients()), "difference": diff.to_json()}
    return ConjectureReport.make("prop5", k, l, None, witness, clock)


def geometric(n: int) -> QPoly:
    """1 + q + ... + q^n."""
    return QPoly({e: 1 for e in range(n + 1)})


def partition_count_check(k: int, l: int) -> bool:
    """Cross-check of the Gaussian binomial against box enumeration."""
    from .partitions import enumerate_in_box

    counts: dict = {}
    for lam in enumerate_in_box((k, l)):
        counts[sum(lam)] = counts.get(sum(lam), 0) + 1
    return QPoly(counts) == grassmannian_hilb(k, l) and comb(k + l, k) == len(enumerate_in_box((k, l)))
