"""Dense matrices over the rationals: rank, solve, inverse, span membership.

Pivoting takes the first nonzero entry in column order so elimination
traces are reproducible.  ``largest_pivot=True`` switches to the entry with
the largest numerator in the column, which keeps intermediate sizes down
on bigger instances without changing any result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

INCONSISTENT = "inconsistent"
UNDERDETERMINED = "underdetermined"


class RationalMatrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence], cols: Optional[int] = None):
        data = [[Fraction(x) for x in row] for row in entries]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self._e = data

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> list:
        return list(self._e[i])

    def tolist(self) -> list:
        return [list(r) for r in self._e]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self._e[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._e)) if other.rows else [()] * other.cols
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._e],
            other.cols,
        )

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * Fraction(x) for a, x in zip(r, v)), Fraction(0)) for r in self._e]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self._e]})"

    def to_json(self) -> list:
        return [[f"{x.numerator}/{x.denominator}" for x in r] for r in self._e]


def _eliminate(rows: list, ncols: int, largest_pivot: bool = False):
    """Reduced row echelon form in place; returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        candidates = [i for i in range(r, nrows) if rows[i][c] != 0]
        if not candidates:
            continue
        p = max(candidates, key=lambda i: abs(rows[i][c].numerator)) if largest_pivot else candidates[0]
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rank(m: RationalMatrix, largest_pivot: bool = False) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    work = [list(r) for r in m._e]
    # eliminate along the shorter side
    if m.cols > m.rows:
        work = [list(col) for col in zip(*work)]
        return len(_eliminate(work, m.rows, largest_pivot))
    return len(_eliminate(work, m.cols, largest_pivot))


def solve(m: RationalMatrix, b: Sequence, largest_pivot: bool = False):
    """Unique solution as a list of Fractions, or INCONSISTENT / UNDERDETERMINED."""
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    work = [list(r) + [Fraction(x)] for r, x in zip(m._e, b)]
    pivots = _eliminate(work, m.cols + 1, largest_pivot)
    if m.cols in pivots:
        return INCONSISTENT
    if len(pivots) < m.cols:
        return UNDERDETERMINED
    x = [Fraction(0)] * m.cols
    for r, c in enumerate(pivots):
        x[c] = work[r][m.cols]
    return x


def inverse(m: RationalMatrix) -> Optional[RationalMatrix]:
    """The inverse, or None when singular."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    work = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m._e)]
    pivots = _eliminate(work, n)
    if pivots != list(range(n)):
        return None
    return RationalMatrix([r[n:] for r in work], n)


def det(m: RationalMatrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    work = [list(r) for r in m._e]
    n = m.rows
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if work[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            work[c], work[p] = work[p], work[c]
            d = -d
        piv = work[c][c]
        d *= piv
        for i in range(c + 1, n):
            f = work[i][c] / piv
            if f:
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return d


@dataclass(frozen=True)
class SpanResult:
    member: bool
    coefficients: Optional[tuple] = None  # certificate when member

    def __bool__(self):
        return self.member


def in_span(vectors: Sequence[Sequence], target: Sequence) -> SpanResult:
    """Is ``target`` a rational combination of ``vectors``?  Certificate checked by substitution."""
    n = len(target)
    target = [Fraction(x) for x in target]
    if any(len(v) != n for v in vectors):
        raise ValueError("all vectors must have the target's length")
    if not vectors:
        return SpanResult(all(x == 0 for x in target), () if all(x == 0 for x in target) else None)
    # columns are the spanning vectors
    work = [[Fraction(v[i]) for v in vectors] + [target[i]] for i in range(n)]
    nv = len(vectors)
    pivots = _eliminate(work, nv + 1)
    if nv in pivots:
        return SpanResult(False)
    coeffs = [Fraction(0)] * nv
    for r, c in enumerate(pivots):
        coeffs[c] = work[r][nv]
    recon = [sum((coeffs[j] * Fraction(vectors[j][i]) for j in range(nv)), Fraction(0)) for i in range(n)]
    if recon != target:
        raise ArithmeticError("span certificate failed to reproduce the target")
    return SpanResult(True, tuple(coeffs))
