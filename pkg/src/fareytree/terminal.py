"""Terminal pairs of injective L-shapes of difference equation type.

An L-shape of size ``(m, n)`` is a map on the bottom row ``f(i, 1)`` and the
left column ``f(1, j)`` of an ``m x n`` grid.  Its terminal pair
``(f(m, 1), f(1, n), (m, n))`` determines the whole L-shape when the
difference equations hold, and these pairs form a tree generated from
``(1, 1, (1, 1))`` by a two-line recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DomainError, GuardError, NotInSetError
from .farey import Children

__all__ = [
    "TerminalPair",
    "LShape",
    "ROOT",
    "check_E",
    "in_E",
    "u_map",
    "children",
    "transpose",
    "decompress",
    "enumerate_E_lshapes",
    "DEFAULT_ENUMERATION_GUARD",
]

DEFAULT_ENUMERATION_GUARD = 9


@dataclass(frozen=True, order=True)
class TerminalPair:
    """``(s, t, (m, n))``; fields are ordered so that sorting is canonical."""

    m: int
    n: int
    s: int
    t: int

    @classmethod
    def of(cls, s: int, t: int, m: int, n: int) -> "TerminalPair":
        """Build from the conventional ``(s, t, m, n)`` argument order."""
        return cls(m, n, s, t)

    @property
    def level(self) -> int:
        return self.m + self.n - 2

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.s, self.t, self.m, self.n)

    def __str__(self):
        return f"({self.s},{self.t},({self.m},{self.n}))"

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, d: dict) -> "TerminalPair":
        return cls.of(int(d["s"]), int(d["t"]), int(d["m"]), int(d["n"]))


ROOT = TerminalPair.of(1, 1, 1, 1)


@dataclass(frozen=True)
class LShape:
    """Values on the bottom row (``bottom[i-1] = f(i, 1)``) and the left
    column (``left[j-1] = f(1, j)``).  The corner is shared."""

    bottom: tuple[int, ...]
    left: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bottom", tuple(int(x) for x in self.bottom))
        object.__setattr__(self, "left", tuple(int(x) for x in self.left))
        if not self.bottom or not self.left:
            raise ValueError("an L-shape needs at least the corner cell")
        if self.bottom[0] != self.left[0]:
            raise ValueError(
                f"corner mismatch: bottom starts with {self.bottom[0]}, left with {self.left[0]}"
            )
        mn = self.m * self.n
        bad = [x for x in self.bottom + self.left if not 1 <= x <= mn]
        if bad:
            raise ValueError(f"values {bad} fall outside [1, {mn}]")

    @property
    def m(self) -> int:
        return len(self.bottom)

    @property
    def n(self) -> int:
        return len(self.left)

    def values(self) -> tuple[int, ...]:
        return self.bottom + self.left[1:]

    def is_injective(self) -> bool:
        vals = self.values()
        return len(set(vals)) == len(vals)

    def terminal_pair(self) -> TerminalPair:
        return TerminalPair.of(self.bottom[-1], self.left[-1], self.m, self.n)

    def transpose(self) -> "LShape":
        return LShape(self.left, self.bottom)

    def to_json(self) -> dict:
        return {"bottom": list(self.bottom), "left": list(self.left)}

    @classmethod
    def from_json(cls, d: dict) -> "LShape":
        return cls(tuple(d["bottom"]), tuple(d["left"]))


def _bottom_ok(bottom: Sequence[int], left: Sequence[int], i: int) -> bool:
    # f(i+1,1) - f(i,1) == #{t : f(1,t) <= f(i+1,1)}, with i 0-based here
    x = bottom[i + 1]
    return x - bottom[i] == sum(1 for y in left if y <= x)


def check_E(shape: LShape) -> bool:
    """Whether the L-shape is injective and satisfies both difference equations.

    Structural problems (wrong corner, out-of-range values) are rejected when
    the :class:`LShape` is built, so a ``False`` here is always a genuine
    failure of the equations or of injectivity.
    """
    if not shape.is_injective():
        return False
    bottom, left = shape.bottom, shape.left
    for i in range(shape.m - 1):
        if not _bottom_ok(bottom, left, i):
            return False
    for j in range(shape.n - 1):
        if not _bottom_ok(left, bottom, j):
            return False
    return True


def in_E(shape: LShape) -> bool:
    """Membership in the normalized set: ``check_E`` plus ``f(1, 1) == 1``."""
    return shape.bottom[0] == 1 and check_E(shape)


def u_map(p: TerminalPair) -> TerminalPair:
    """Parent of ``p``: drop the bottom-right cell when ``s > t``, else the top-left one."""
    s, t, m, n = p.s, p.t, p.m, p.n
    if m < 1 or n < 1:
        raise DomainError(f"indices must be positive, got ({m}, {n})")
    if m + n < 3:
        raise DomainError("the root (1,1,(1,1)) has no parent")
    if s == t:
        raise NotInSetError(f"{p} has s == t above the root")
    if s > t:
        if m < 2:
            raise NotInSetError(f"{p} has s > t but no column to drop")
        return TerminalPair.of(s - n, t, m - 1, n)
    if n < 2:
        raise NotInSetError(f"{p} has s < t but no row to drop")
    return TerminalPair.of(s, t - m, m, n - 1)


def children(p: TerminalPair) -> Children:
    s, t, m, n = p.s, p.t, p.m, p.n
    d = s - t
    horizontal = TerminalPair.of(s + n, t, m + 1, n) if d > -n else None
    vertical = TerminalPair.of(s, t + m, m, n + 1) if d < m else None
    return Children(horizontal, vertical)


def transpose(p: TerminalPair) -> TerminalPair:
    return TerminalPair.of(p.t, p.s, p.n, p.m)


def decompress(p: TerminalPair) -> LShape:
    """Recover the unique L-shape whose terminal pair is ``p``.

    Walks ``u_map`` up to the root, recording ``f(m', 1)`` or ``f(1, n')``
    as each is revealed.  Raises :class:`NotInSetError` when the walk leaves
    the valid range or the result fails the difference equations.
    """
    m, n = p.m, p.n
    if m < 1 or n < 1:
        raise DomainError(f"indices must be positive, got ({m}, {n})")
    bottom = [0] * m
    left = [0] * n
    cur = p
    while cur.m + cur.n > 2:
        if not (1 <= cur.s <= cur.m * cur.n and 1 <= cur.t <= cur.m * cur.n):
            raise NotInSetError(f"{p}: ascent reached out-of-range pair {cur}")
        if cur.s > cur.t:
            bottom[cur.m - 1] = cur.s
        elif cur.s < cur.t:
            left[cur.n - 1] = cur.t
        cur = u_map(cur)
    if cur != ROOT:
        raise NotInSetError(f"{p}: ascent ended at {cur}, not at the root")
    bottom[0] = left[0] = 1
    shape = LShape(tuple(bottom), tuple(left))
    if not check_E(shape):
        raise NotInSetError(f"{p}: reconstructed L-shape fails the difference equations")
    return shape


def _left_arms(m: int, n: int) -> Iterator[tuple[int, ...]]:
    # Both arms are strictly increasing from f(1,1) = 1: each difference counts
    # at least the corner, which is the minimum value.
    for rest in combinations(range(2, m * n + 1), n - 1):
        yield (1,) + rest


def _extend_bottom(left: tuple[int, ...], m: int, mn: int) -> Iterator[tuple[int, ...]]:
    taken = set(left)

    def grow(bottom: list[int]) -> Iterator[tuple[int, ...]]:
        if len(bottom) == m:
            yield tuple(bottom)
            return
        prev = bottom[-1]
        for x in range(prev + 1, mn + 1):
            if x in taken:
                continue
            if x - prev == sum(1 for y in left if y <= x):
                bottom.append(x)
                yield from grow(bottom)
                bottom.pop()

    yield from grow([1])


def enumerate_E_lshapes(m: int, n: int, guard: int = DEFAULT_ENUMERATION_GUARD) -> list[LShape]:
    """Exhaustive search for every normalized injective L-shape satisfying the
    difference equations, sorted by ``(bottom, left)``.

    Each left column is enumerated outright; bottom values are placed one at
    a time and the bottom-row equation is checked as soon as a value lands.
    """
    if m < 1 or n < 1:
        raise DomainError(f"indices must be positive, got ({m}, {n})")
    if m + n > guard:
        raise GuardError(f"m + n = {m + n} exceeds the enumeration guard {guard}")
    mn = m * n
    found = []
    for left in _left_arms(m, n):
        for bottom in _extend_bottom(left, m, mn):
            shape = LShape(bottom, left)
            if check_E(shape):
                found.append(shape)
    found.sort(key=lambda L: (L.bottom, L.left))
    return found
