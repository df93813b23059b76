"""The ring R^{k,l} in its Schur basis, truncated to the k x l box.

Multiplication runs on the Littlewood-Richardson rule (skew tableaux with a
lattice reading word).  An independent route goes through the dual
Jacobi-Trudi determinant: s_mu becomes a signed sum of e-monomials, each of
which acts by iterated vertical-strip Pieri steps.  Terms that leave the box
are dropped as soon as they appear; this is safe because a nonzero
c^nu_{lam,mu} forces lam and mu inside nu.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Mapping

from .partitions import Box, Partition, conjugate


@dataclass(frozen=True)
class BoxContext:
    k: int
    l: int

    def __post_init__(self):
        Box(self.k, self.l)

    @property
    def box(self) -> Box:
        return Box(self.k, self.l)

    @property
    def top(self) -> Partition:
        return Partition([self.l] * self.k)

    def contains(self, lam) -> bool:
        return len(lam) <= self.k and (not lam or lam[0] <= self.l)


def context(k: int, l: int) -> BoxContext:
    return BoxContext(k, l)


class RingElement:
    """Immutable sparse rational combination of Schur classes in one box."""

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: BoxContext, terms: Mapping = None):
        clean = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            if not ctx.contains(lam):
                raise ValueError(f"{list(lam)} does not fit in the {ctx.k}x{ctx.l} box")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.ctx = ctx
        self._terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def _raw(cls, ctx, terms: dict) -> "RingElement":
        # trusted constructor: keys already in box, coefficients Fractions/ints
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._terms = {lam: Fraction(c) for lam, c in terms.items() if c}
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def support(self) -> list:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self):
        """Common weight of the support; None for zero, "mixed" otherwise."""
        weights = {sum(lam) for lam in self._terms}
        if not weights:
            return None
        if len(weights) > 1:
            return "mixed"
        return weights.pop()

    def homogeneous_part(self, d: int) -> "RingElement":
        return RingElement._raw(self.ctx, {lam: c for lam, c in self._terms.items() if sum(lam) == d})

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = one(self.ctx) * other
        self._check(other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, 0) + c
        return RingElement._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement._raw(self.ctx, {lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElement._raw(self.ctx, {lam: c * other for lam, c in self._terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = one(self.ctx)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = one(self.ctx) * other
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self._terms.items())))

    def to_dict(self) -> dict:
        return {
            "box": [self.ctx.k, self.ctx.l],
            "terms": [{"partition": list(lam), "coeff": _frac_str(c)} for lam, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "RingElement":
        ctx = BoxContext(*obj["box"])
        return cls(ctx, {tuple(t["partition"]): Fraction(t["coeff"]) for t in obj["terms"]})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.items():
            name = "s_(" + ",".join(map(str, lam)) + ")"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def zero(ctx: BoxContext) -> RingElement:
    return RingElement._raw(ctx, {})


def one(ctx: BoxContext) -> RingElement:
    return RingElement._raw(ctx, {Partition(): 1})


def schur(ctx: BoxContext, lam) -> RingElement:
    lam = Partition(lam)
    if not ctx.contains(lam):
        raise ValueError(f"{list(lam)} does not fit in the {ctx.k}x{ctx.l} box")
    return RingElement._raw(ctx, {lam: 1})


def e(ctx: BoxContext, i: int) -> RingElement:
    if i < 0:
        raise ValueError("negative index")
    if i > ctx.k:
        return zero(ctx)
    return schur(ctx, [1] * i)


def h(ctx: BoxContext, j: int) -> RingElement:
    if j < 0:
        raise ValueError("negative index")
    if j > ctx.l:
        return zero(ctx)
    return schur(ctx, [j] if j else [])


def coefficient(x: RingElement, nu) -> Fraction:
    nu = Partition(nu)
    if not x.ctx.contains(nu):
        raise ValueError(f"{list(nu)} does not fit in the {x.ctx.k}x{x.ctx.l} box")
    return x._terms.get(nu, Fraction(0))


# --- Pieri rules -----------------------------------------------------------

@lru_cache(maxsize=None)
def vertical_strips(lam: tuple, i: int, k: int, l: int) -> tuple:
    """Shapes in the k x l box obtained by adding a vertical i-strip to lam."""
    lam = list(lam) + [0] * (k - len(lam))
    out = []
    for rows in combinations(range(k), i):
        mu = lam[:]
        for r in rows:
            mu[r] += 1
        if mu and mu[0] > l:
            continue
        if all(mu[r] <= mu[r - 1] for r in rows if r > 0):
            out.append(Partition(mu))
    return tuple(out)


@lru_cache(maxsize=None)
def horizontal_strips(lam: tuple, j: int, k: int, l: int) -> tuple:
    """Shapes in the k x l box obtained by adding a horizontal j-strip to lam."""
    lam = list(lam) + [0] * (k - len(lam))
    out = []

    def grow(r, left, mu):
        if r == k:
            if left == 0:
                out.append(Partition(mu))
            return
        cap = l if r == 0 else lam[r - 1]
        for add in range(min(left, cap - lam[r]), -1, -1):
            grow(r + 1, left - add, mu + [lam[r] + add])

    grow(0, j, [])
    return tuple(sorted(out))


def _pieri(x: RingElement, n: int, strips) -> RingElement:
    out: dict = {}
    for lam, c in x._terms.items():
        for mu in strips(lam, n, x.ctx.k, x.ctx.l):
            out[mu] = out.get(mu, 0) + c
    return RingElement._raw(x.ctx, out)


def pieri_e(x: RingElement, i: int) -> RingElement:
    """x * e_i."""
    if i < 0:
        raise ValueError("negative index")
    return _pieri(x, i, vertical_strips)


def pieri_h(x: RingElement, j: int) -> RingElement:
    """x * h_j."""
    if j < 0:
        raise ValueError("negative index")
    return _pieri(x, j, horizontal_strips)


# --- Littlewood-Richardson ---------------------------------------------------

@lru_cache(maxsize=None)
def lr_coefficients(lam: tuple, mu: tuple, k: int, l: int) -> tuple:
    """Nonzero c^nu_{lam,mu} for nu in the k x l box, as sorted (nu, c) pairs.

    Enumerates LR fillings of nu/lam with content mu row by row, each row
    right to left, so the reverse reading word is built in order and the
    lattice condition is checked cell by cell.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if len(lam) > k or (lam and lam[0] > l):
        return ()
    n_labels = len(mu)
    lam_p = list(lam) + [0] * (k - len(lam))
    counts = [0] * (n_labels + 1)  # counts[v] for labels 1..n_labels
    remaining = sum(mu)
    result: dict = {}
    rows: list = []  # rows[r] = labels in row r of nu/lam, left to right
    nu: list = []

    def fill_row(r, c, row_right, row_vals):
        # place cells at columns c, c-1, ..., lam_p[r]; row_right bounds the value
        nonlocal remaining
        if c < lam_p[r]:
            rows.append(row_vals[::-1])
            next_row(r + 1)
            rows.pop()
            return
        lo = 1
        if r > 0 and c >= lam_p[r - 1]:
            above = rows[r - 1][c - lam_p[r - 1]]
            lo = above + 1
        hi = min(row_right, n_labels)
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            remaining -= 1
            row_vals.append(v)
            fill_row(r, c - 1, v, row_vals)
            row_vals.pop()
            remaining += 1
            counts[v] -= 1

    def next_row(r):
        if remaining == 0:
            shape = Partition(nu + lam_p[r:])
            result[shape] = result.get(shape, 0) + 1
            return
        if r == k:
            return
        cap = l if r == 0 else nu[r - 1]
        # a row of nu/lam holds at most one cell per column, so it never
        # needs more cells than are left to place
        top = min(cap, lam_p[r] + remaining)
        for length in range(lam_p[r], top + 1):
            nu.append(length)
            fill_row(r, length - 1, n_labels, [])
            nu.pop()

    next_row(0)
    return tuple(sorted(result.items()))


def multiply(x: RingElement, y: RingElement) -> RingElement:
    x._check(y)
    ctx = x.ctx
    out: dict = {}
    for lam, a in x._terms.items():
        for mu, b in y._terms.items():
            # LR coefficients are symmetric; put the shorter content second
            p, q = (lam, mu) if sum(lam) >= sum(mu) else (mu, lam)
            ab = a * b
            for nu, c in lr_coefficients(p, q, ctx.k, ctx.l):
                out[nu] = out.get(nu, 0) + ab * c
    return RingElement._raw(ctx, out)


# --- e-monomials and Jacobi-Trudi ------------------------------------------

@lru_cache(maxsize=None)
def _e_monomial_terms(k: int, l: int, parts: tuple) -> tuple:
    ctx = BoxContext(k, l)
    if not parts:
        return ((Partition(), Fraction(1)),)
    prev = RingElement._raw(ctx, dict(_e_monomial_terms(k, l, parts[1:])))
    return tuple(sorted(pieri_e(prev, parts[0])._terms.items()))


def e_monomial(ctx: BoxContext, lam) -> RingElement:
    """e_{lam_1} e_{lam_2} ... via iterated Pieri, truncating at every step."""
    parts = tuple(sorted((int(p) for p in lam if p), reverse=True))
    return RingElement._raw(ctx, dict(_e_monomial_terms(ctx.k, ctx.l, parts)))


def e_monomial_untruncated_then_cut(ctx: BoxContext, lam) -> RingElement:
    """Same product computed in a box large enough to never truncate, cut once at the end."""
    parts = [p for p in lam if p]
    n = sum(parts)
    big = BoxContext(max(n, 1), max(len(parts), 1))
    full = e_monomial(big, parts)
    return RingElement._raw(ctx, {mu: c for mu, c in full._terms.items() if ctx.contains(mu)})


def _compositions(r: int):
    if r == 0:
        yield ()
        return
    for first in range(1, r + 1):
        for rest in _compositions(r - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def jacobi_trudi_h_expansion(r: int) -> tuple:
    """h_r as a signed sum of e-monomials, expanding the r x r determinant.

    Expansion along the first row of the Hessenberg matrix with e's above
    the diagonal gives det_r = sum_i (-1)^(i-1) e_i det_{r-i}, which unrolls
    to a sum over compositions of r with sign (-1)^(r - #parts).
    """
    out: dict = {}
    for comp in _compositions(r):
        key = Partition(sorted(comp, reverse=True))
        out[key] = out.get(key, 0) + (-1) ** (r - len(comp))
    return tuple(sorted((lam, c) for lam, c in out.items() if c))


def _evaluate_e_polynomial(ctx: BoxContext, expansion) -> RingElement:
    total: dict = {}
    for lam, c in expansion:
        for nu, a in _e_monomial_terms(ctx.k, ctx.l, tuple(lam)):
            total[nu] = total.get(nu, 0) + c * a
    return RingElement._raw(ctx, total)


def jacobi_trudi_h(ctx: BoxContext, r: int) -> RingElement:
    if r < 1:
        raise ValueError("r must be positive")
    return _evaluate_e_polynomial(ctx, jacobi_trudi_h_expansion(r))


def _perm_sign(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def schur_e_expansion(mu: tuple) -> tuple:
    """s_mu = det(e_{mu'_i - i + j}) as a signed sum of e-monomials."""
    conj = conjugate(mu)
    n = len(conj)
    out: dict = {}
    for p in permutations(range(n)):
        idx = [conj[i] - i + p[i] for i in range(n)]
        if any(t < 0 for t in idx):
            continue
        key = Partition(sorted((t for t in idx if t), reverse=True))
        out[key] = out.get(key, 0) + _perm_sign(p)
    return tuple(sorted((lam, c) for lam, c in out.items() if c))


def multiply_via_jacobi_trudi(x: RingElement, y: RingElement) -> RingElement:
    """Oracle product: expand y's Schur classes into e-monomials, act by Pieri."""
    x._check(y)
    ctx = x.ctx
    out = zero(ctx)
    for mu, b in y._terms.items():
        for lam, c in schur_e_expansion(tuple(mu)):
            term = x
            for part in lam:
                term = pieri_e(term, part)
            out = out + term * (b * c)
    return out


def omega(x: RingElement) -> RingElement:
    """s_lam -> s_lam' ; defined only on square boxes."""
    if x.ctx.k != x.ctx.l:
        raise ValueError(f"omega needs a square box, got {x.ctx.k}x{x.ctx.l}")
    return RingElement._raw(x.ctx, {conjugate(lam): c for lam, c in x._terms.items()})


def top_coefficient(x: RingElement) -> Fraction:
    """Coefficient of the fundamental class s_{l^k}."""
    return x._terms.get(x.ctx.top, Fraction(0))


def e1_power(ctx: BoxContext, n: int, start: RingElement = None) -> RingElement:
    x = one(ctx) if start is None else start
    for _ in range(n):
        x = pieri_e(x, 1)
    return x


def from_terms(ctx: BoxContext, pairs: Iterable) -> RingElement:
    return RingElement(ctx, dict(pairs))
