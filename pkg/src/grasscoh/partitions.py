"""Integer partitions inside a k x l box.

Partitions are stored as tuples of positive parts in weakly decreasing
order.  The canonical total order used for every matrix row/column index
in the package is plain tuple (lexicographic) order, so
``() < (1,) < (1, 1) < (2,) < (2, 1) < ...``.  Within a fixed weight this
order is a linear extension of dominance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-based part access returning 0 past the end."""
        return self[i] if i < len(self) else 0

    def to_json(self) -> list:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


@dataclass(frozen=True)
class Box:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 1 or self.l < 1:
            raise ValueError(f"box dimensions must be positive, got {self.k}x{self.l}")

    @property
    def area(self) -> int:
        return self.k * self.l

    def contains(self, lam) -> bool:
        return len(lam) <= self.k and (not lam or lam[0] <= self.l)

    def require(self, lam) -> None:
        if not self.contains(lam):
            raise ValueError(f"{list(lam)} does not fit in the {self.k}x{self.l} box")


def _as_box(box) -> Box:
    return box if isinstance(box, Box) else Box(*box)


def _in_box(k: int, l: int, d: Optional[int]) -> Iterator[tuple]:
    # Lexicographic generation: first part ascending, recursion on the rest.
    if d is not None and (d < 0 or d > k * l):
        return
    if d == 0 or d is None:
        yield ()
    if k == 0:
        return
    for first in range(1, l + 1):
        if d is not None:
            rest = d - first
            if rest < 0 or rest > (k - 1) * first:
                continue
        for tail in _in_box(k - 1, first, None if d is None else d - first):
            yield (first,) + tail


@lru_cache(maxsize=None)
def _enumerate_cached(k: int, l: int, d: Optional[int]) -> tuple:
    return tuple(Partition(p) for p in _in_box(k, l, d))


def enumerate_in_box(box, d: Optional[int] = None) -> list:
    """All partitions inside ``box`` (of weight ``d`` if given), in canonical order."""
    box = _as_box(box)
    return list(_enumerate_cached(box.k, box.l, d))


def partitions_of(n: int, max_part: Optional[int] = None, max_length: Optional[int] = None) -> list:
    """Partitions of ``n`` with bounded parts and length, in canonical order."""
    if n < 0:
        return []
    max_part = n if max_part is None else max_part
    max_length = n if max_length is None else max_length
    if n == 0:
        return [Partition()]
    if max_part <= 0 or max_length <= 0:
        return []
    return list(_enumerate_cached(max_length, max_part, n))


def conjugate(lam) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def complement_in_box(lam, box) -> Partition:
    box = _as_box(box)
    box.require(lam)
    padded = list(lam) + [0] * (box.k - len(lam))
    return Partition(box.l - padded[box.k - 1 - i] for i in range(box.k))


def durfee(lam) -> int:
    i = 0
    while i < len(lam) and lam[i] >= i + 1:
        i += 1
    return i


def contains(outer, inner) -> bool:
    """True when the diagram of ``inner`` sits inside that of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def dominates(lam, mu) -> bool:
    """Dominance order ``mu <= lam`` for partitions of equal weight."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if b > a:
            return False
    return True


@dataclass(frozen=True)
class Prop5Decomposition:
    """The four pieces of a nonempty partition in the q-binomial bijection.

    ``i`` is the height of the first-column piece, ``j`` the number of
    rows carrying the full-width rectangle of width ``l - i + 1``;
    ``c`` fits in a ``j x (i - 1)`` box and ``d`` in an ``i x (l - i)`` box.
    """

    i: int
    j: int
    c: Partition
    d: Partition

    def weight(self, box) -> int:
        box = _as_box(box)
        return self.i + self.j * (box.l - self.i + 1) + sum(self.c) + sum(self.d)

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "c": list(self.c), "d": list(self.d)}


def prop5_decompose(lam, box) -> Prop5Decomposition:
    box = _as_box(box)
    lam = Partition(lam)
    if not lam:
        raise ValueError("the empty partition has no decomposition")
    box.require(lam)
    s = len(lam)
    bar = complement_in_box(lam[: s - 1], Box(s - 1, box.l)) if s > 1 else Partition()
    i = durfee(bar) + 1
    j = s - i
    width = box.l - i + 1
    c = Partition(lam[t] - width for t in range(j))
    d = Partition(lam[j + t] - 1 for t in range(i))
    return Prop5Decomposition(i, j, c, d)


def prop5_compose(dec: Prop5Decomposition, box) -> Partition:
    box = _as_box(box)
    i, j = dec.i, dec.j
    if not 1 <= i <= min(box.k, box.l):
        raise ValueError(f"i={i} out of range for the {box.k}x{box.l} box")
    if not 0 <= j <= box.k - i:
        raise ValueError(f"j={j} out of range for i={i} in the {box.k}x{box.l} box")
    if not Box(max(j, 1), max(i - 1, 1)).contains(dec.c) or (j == 0 and dec.c) or (i == 1 and dec.c):
        raise ValueError(f"c={list(dec.c)} does not fit in a {j}x{i - 1} box")
    if dec.d and (len(dec.d) > i or dec.d[0] > box.l - i):
        raise ValueError(f"d={list(dec.d)} does not fit in a {i}x{box.l - i} box")
    width = box.l - i + 1
    c = list(dec.c) + [0] * (j - len(dec.c))
    d = list(dec.d) + [0] * (i - len(dec.d))
    return Partition([width + x for x in c] + [1 + x for x in d])
