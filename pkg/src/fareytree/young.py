"""Young ranking tables and the interval-to-table bijection.

For a slope ``xi = p/q > 0`` the ranking table of size ``(m, n)`` puts at
cell ``(i, j)`` the rank of ``i + j*xi`` among all ``s + t*xi``.  All
comparisons are done on integers as ``q*s + p*t <= q*i + p*j``.

Tables are stored bottom-up: ``rows[j-1][i-1]`` is the entry at ``(i, j)``,
so ``rows[0]`` is the bottom row and ``(1, 1)`` sits at the lower left.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

import numpy as np

from .errors import BreakpointError, DomainError, NotInSetError
from .exact_rational import ExtendedRational, mediant, parse
from .farey import FareyVertex, farey_intervals, farey_sequence, is_vertex, v_map
from .terminal import LShape, TerminalPair

__all__ = [
    "RankingTable",
    "YoungTerminalPair",
    "ranking_table",
    "delta",
    "delta_one_sided",
    "suranyi_table",
    "suranyi_terminal",
    "young_terminal_pairs",
    "suranyi_inverse",
    "phi_map",
    "is_young",
]

# Same shape and invariants as a terminal pair; only provenance differs.
YoungTerminalPair = TerminalPair


@dataclass(frozen=True)
class RankingTable:
    m: int
    n: int
    xi: ExtendedRational
    rows: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError(f"cell ({i}, {j}) outside a {self.m}x{self.n} table")
        return self.rows[j - 1][i - 1]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def is_young(self) -> bool:
        return is_young(self.rows)

    def lshape(self) -> LShape:
        return LShape(self.rows[0], tuple(row[0] for row in self.rows))

    def terminal_pair(self) -> TerminalPair:
        return TerminalPair.of(self(self.m, 1), self(1, self.n), self.m, self.n)

    def transpose(self) -> "RankingTable":
        """Index transpose; equals the table of size ``(n, m)`` at ``1/xi``."""
        flipped = tuple(zip(*self.rows))
        return RankingTable(self.n, self.m, ExtendedRational(self.xi.den, self.xi.num), flipped)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "xi": str(self.xi), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, d: dict) -> "RankingTable":
        return cls(int(d["m"]), int(d["n"]), parse(d["xi"]), tuple(tuple(r) for r in d["rows"]))

    def __str__(self):
        width = len(str(self.m * self.n))
        return "\n".join(" ".join(f"{x:>{width}}" for x in row) for row in reversed(self.rows))


def _check_size(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise DomainError(f"table size must be positive, got ({m}, {n})")


def _check_slope(xi: ExtendedRational) -> None:
    if xi.is_zero or xi.is_infinite:
        raise DomainError(f"slope must be finite and positive, got {xi}")


def _ranks(m: int, n: int, p: int, q: int) -> np.ndarray:
    """Rank array of shape ``(n, m)``; entry ``[j-1, i-1]`` ranks ``q*i + p*j``."""
    i = np.arange(1, m + 1, dtype=np.int64)
    j = np.arange(1, n + 1, dtype=np.int64)
    keys = q * i[None, :] + p * j[:, None]
    flat = np.sort(keys, axis=None)
    return np.searchsorted(flat, keys, side="right")


def ranking_table(m: int, n: int, xi: ExtendedRational) -> RankingTable:
    """The ranking table of size ``(m, n)`` for slope ``xi``.

    ``xi`` must avoid ``G(m-1, n-1)``; on those slopes two cells tie and the
    table is not injective.
    """
    _check_size(m, n)
    _check_slope(xi)
    if (m - 1) * (n - 1) and xi.num <= m - 1 and xi.den <= n - 1:
        raise BreakpointError(f"slope {xi} lies in G({m - 1}, {n - 1})")
    ranks = _ranks(m, n, xi.num, xi.den)
    return RankingTable(m, n, xi, tuple(tuple(int(x) for x in row) for row in ranks))


def delta(m: int, n: int, xi: ExtendedRational) -> int:
    """``tau(m, 1) - tau(1, n)`` written as two lattice-point counts.

    Counts ``t*xi <= s`` minus ``t*xi >= s`` over ``0 <= s < m``,
    ``0 <= t < n``; defined for every positive finite ``xi``, breakpoints
    included.
    """
    _check_size(m, n)
    _check_slope(xi)
    s = np.arange(m, dtype=np.int64)[:, None] * xi.den
    tp = np.arange(n, dtype=np.int64)[None, :] * xi.num
    return int(np.count_nonzero(tp <= s) - np.count_nonzero(tp >= s))


def delta_one_sided(
    m: int, n: int, x: ExtendedRational, side: Literal["left", "right"]
) -> int:
    """Exact one-sided limit of :func:`delta` at ``x``.

    Every jump of ``delta`` happens at a term of ``G(m, n)``, so the limit is
    the value at the mediant of ``x`` and its strict neighbour on that side.
    """
    _check_size(m, n)
    _check_slope(x)
    terms = farey_sequence(m, n).terms
    if side == "left":
        nb = terms[bisect_left(terms, x) - 1]
        probe = mediant(nb, x)
    elif side == "right":
        nb = terms[bisect_right(terms, x)]
        probe = mediant(x, nb)
    else:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    return delta(m, n, probe)


def _interior_slope(v: FareyVertex, xi: ExtendedRational | None) -> ExtendedRational:
    if xi is None:
        return mediant(v.a, v.b)
    if not v.a < xi < v.b:
        raise DomainError(f"slope {xi} is not inside ({v.a}, {v.b})")
    return xi


def suranyi_table(v: FareyVertex, xi: ExtendedRational | None = None) -> RankingTable:
    """Ranking table of size ``(v.m + 1, v.n + 1)`` at a slope inside ``v``.

    The mediant of the endpoints is used unless ``xi`` is given; any interior
    slope yields the same table.
    """
    if not is_vertex(v):
        raise NotInSetError(f"{v} is not a generalized Farey interval")
    return ranking_table(v.m + 1, v.n + 1, _interior_slope(v, xi))


def suranyi_terminal(v: FareyVertex) -> TerminalPair:
    return suranyi_table(v).terminal_pair()


def young_terminal_pairs(m: int, n: int) -> list[TerminalPair]:
    _check_size(m, n)
    return sorted(_inverse_index(m, n))


@lru_cache(maxsize=1024)
def _inverse_index(m: int, n: int) -> dict[TerminalPair, FareyVertex]:
    index = {}
    for v in farey_intervals(m - 1, n - 1):
        p = suranyi_terminal(v)
        if p in index:
            raise AssertionError(f"{v} and {index[p]} share the image {p}")
        index[p] = v
    return index


def suranyi_inverse(p: TerminalPair) -> FareyVertex:
    """The interval whose table has terminal pair ``p``.

    Found by matching against every interval of ``G(m-1, n-1)``; the index
    for each size is built once and cached.
    """
    _check_size(p.m, p.n)
    try:
        return _inverse_index(p.m, p.n)[p]
    except KeyError:
        raise NotInSetError(f"{p} is not a Young terminal pair") from None


def phi_map(p: TerminalPair) -> TerminalPair:
    """Parent of a Young terminal pair, transported from the Farey tree."""
    if p.m + p.n < 3:
        raise DomainError("the root (1,1,(1,1)) has no parent")
    return suranyi_terminal(v_map(suranyi_inverse(p)))


def is_young(table: RankingTable | Sequence[Sequence[int]] | np.ndarray) -> bool:
    """Whether entries weakly increase along every row and every column."""
    if isinstance(table, RankingTable):
        table = table.rows
    arr = np.asarray(table)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d table")
    return bool(np.all(np.diff(arr, axis=0) >= 0) and np.all(np.diff(arr, axis=1) >= 0))
