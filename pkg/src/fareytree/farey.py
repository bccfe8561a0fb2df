"""Generalized Farey sequences and the tree of tagged Farey intervals.

``G(m, n)`` is ``{0, inf}`` together with every ``p/q`` for ``1 <= p <= m``
and ``1 <= q <= n`` (just ``{0, inf}`` when ``m*n == 0``).  A vertex of the
Farey tree is an open interval between adjacent terms of ``G(m, n)``, tagged
with its indices; its level is ``m + n``.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple, Optional

from .errors import DomainError
from .exact_rational import INFINITY, ZERO, ExtendedRational, parse, reciprocal

__all__ = [
    "FareySequence",
    "FareyVertex",
    "Children",
    "ROOT",
    "farey_sequence",
    "farey_intervals",
    "v_map",
    "children",
    "transpose",
    "is_vertex",
    "level_vertices",
]


@dataclass(frozen=True)
class FareySequence:
    m: int
    n: int
    terms: tuple[ExtendedRational, ...]

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self):
        return " ".join(str(x) for x in self.terms)


@dataclass(frozen=True)
class FareyVertex:
    """The open interval ``(a, b)`` tagged with indices ``(m, n)``."""

    a: ExtendedRational
    b: ExtendedRational
    m: int
    n: int

    @property
    def level(self) -> int:
        return self.m + self.n

    def key(self) -> tuple[int, int, int, int, int, int]:
        return (self.a.num, self.a.den, self.b.num, self.b.den, self.m, self.n)

    def sort_key(self):
        return (self.m, self.n, self.a, self.b)

    def __lt__(self, other: "FareyVertex") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"(({self.a},{self.b}),({self.m},{self.n}))"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, d: dict) -> "FareyVertex":
        return cls(parse(d["a"]), parse(d["b"]), int(d["m"]), int(d["n"]))


class Children(NamedTuple):
    horizontal: Optional[object]
    vertical: Optional[object]

    def present(self) -> list:
        return [c for c in self if c is not None]


ROOT = FareyVertex(ZERO, INFINITY, 0, 0)


def _check_indices(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise DomainError(f"indices must be nonnegative, got ({m}, {n})")


@lru_cache(maxsize=4096)
def farey_sequence(m: int, n: int) -> FareySequence:
    """Sorted distinct terms of ``G(m, n)``, from ``0/1`` up to ``1/0``."""
    _check_indices(m, n)
    values = {ZERO, INFINITY}
    if m * n:
        values.update(
            ExtendedRational(p, q)
            for p in range(1, m + 1)
            for q in range(1, n + 1)
            if gcd(p, q) == 1
        )
    return FareySequence(m, n, tuple(sorted(values)))


def farey_intervals(m: int, n: int) -> list[FareyVertex]:
    terms = farey_sequence(m, n).terms
    return [FareyVertex(a, b, m, n) for a, b in zip(terms, terms[1:])]


def level_vertices(k: int) -> list[FareyVertex]:
    """All Farey vertices of level ``k``, in canonical order."""
    out = []
    for m in range(k + 1):
        out.extend(farey_intervals(m, k - m))
    return out


def is_vertex(v: FareyVertex) -> bool:
    """True when ``(v.a, v.b)`` is a gap between adjacent terms of ``G(v.m, v.n)``."""
    if v.m < 0 or v.n < 0:
        return False
    terms = farey_sequence(v.m, v.n).terms
    i = bisect_left(terms, v.a)
    return i + 1 < len(terms) and terms[i] == v.a and terms[i + 1] == v.b


def _frac(p: int, q: int) -> ExtendedRational:
    return ExtendedRational(p, q)


def v_map(v: FareyVertex) -> FareyVertex:
    """Parent of ``v`` in the Farey tree.

    Intervals wholly left of ``m/n`` lose a horizontal index, intervals wholly
    right of it lose a vertical index; the two intervals touching ``m/n`` are
    widened to the neighbouring term of the smaller sequence.
    """
    a, b, m, n = v.a, v.b, v.m, v.n
    _check_indices(m, n)
    if m + n == 0:
        raise DomainError("the root ((0/1,1/0),(0,0)) has no parent")
    if m == 0:
        return FareyVertex(ZERO, INFINITY, 0, n - 1)
    if n == 0:
        return FareyVertex(ZERO, INFINITY, m - 1, 0)
    pivot = _frac(m, n)
    if b < pivot:
        return FareyVertex(a, b, m - 1, n)
    if b == pivot:
        terms = farey_sequence(m - 1, n).terms
        return FareyVertex(a, terms[bisect_right(terms, a)], m - 1, n)
    if a == pivot:
        terms = farey_sequence(m, n - 1).terms
        return FareyVertex(terms[bisect_left(terms, b) - 1], b, m, n - 1)
    # a > pivot
    return FareyVertex(a, b, m, n - 1)


def children(v: FareyVertex) -> Children:
    """Horizontal child (indices ``(m+1, n)``) and vertical child (``(m, n+1)``)."""
    a, b, m, n = v.a, v.b, v.m, v.n
    _check_indices(m, n)
    if m == 0 and n == 0:
        return Children(
            FareyVertex(ZERO, INFINITY, 1, 0), FareyVertex(ZERO, INFINITY, 0, 1)
        )
    if m == 0:
        return Children(
            FareyVertex(ZERO, _frac(1, n), 1, n), FareyVertex(ZERO, INFINITY, 0, n + 1)
        )
    if n == 0:
        return Children(
            FareyVertex(ZERO, INFINITY, m + 1, 0), FareyVertex(_frac(m, 1), INFINITY, m, 1)
        )

    horizontal = vertical = None
    right = _frac(m + 1, n)
    if a < right:
        horizontal = FareyVertex(a, right if b >= right else b, m + 1, n)
    left = _frac(m, n + 1)
    if b > left:
        vertical = FareyVertex(left if a <= left else a, b, m, n + 1)
    return Children(horizontal, vertical)


def transpose(v: FareyVertex) -> FareyVertex:
    return FareyVertex(reciprocal(v.b), reciprocal(v.a), v.n, v.m)
