"""Nonnegative rationals extended with infinity.

Values are stored as reduced pairs ``num/den``; infinity is ``1/0`` and zero
is ``0/1``.  Every component is bounded by a signed 64-bit range, and an
:class:`OverflowError` is raised instead of silently growing past it.
"""

from __future__ import annotations

from functools import total_ordering
from math import gcd

__all__ = [
    "ExtendedRational",
    "INT64_MAX",
    "ZERO",
    "INFINITY",
    "make",
    "compare",
    "reciprocal",
    "mediant",
    "parse",
]

INT64_MAX = 2**63 - 1


def _check_int(x: int) -> None:
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError(f"expected int, got {type(x).__name__}")
    if x > INT64_MAX:
        raise OverflowError(f"{x} exceeds the 64-bit integer range")


@total_ordering
class ExtendedRational:
    """A reduced fraction ``num/den`` with ``num, den >= 0``.

    Use :func:`make` (or the constructor, which reduces) to build values.
    Instances are immutable and hashable.
    """

    __slots__ = ("num", "den")

    num: int
    den: int

    def __init__(self, num: int, den: int = 1):
        _check_int(num)
        _check_int(den)
        if num < 0 or den < 0:
            raise ValueError(f"negative component in {num}/{den}")
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a value")
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedRational is immutable")

    def __reduce__(self):
        return (ExtendedRational, (self.num, self.den))

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def __eq__(self, other):
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __lt__(self, other):
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        return compare(self, other) < 0

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"ExtendedRational({self.num}, {self.den})"

    def __str__(self):
        return f"{self.num}/{self.den}"

    def as_tuple(self) -> tuple[int, int]:
        return (self.num, self.den)


def make(p: int, q: int = 1) -> ExtendedRational:
    """Return the reduced representative of ``p/q``.

    >>> make(2, 4)
    ExtendedRational(1, 2)
    >>> str(make(3, 0))
    '1/0'
    """
    return ExtendedRational(p, q)


ZERO = ExtendedRational(0, 1)
INFINITY = ExtendedRational(1, 0)


def compare(x: ExtendedRational, y: ExtendedRational) -> int:
    """Three-way comparison: -1, 0 or 1.

    Cross multiplication orders finite values; with ``inf = 1/0`` the same
    formula already puts infinity above everything finite.
    """
    lhs = x.num * y.den
    rhs = y.num * x.den
    if lhs == rhs:
        # only 1/0 vs 1/0 collides besides genuine equality, and that is equal too
        return 0
    return -1 if lhs < rhs else 1


def reciprocal(x: ExtendedRational) -> ExtendedRational:
    return ExtendedRational(x.den, x.num)


def mediant(a: ExtendedRational, b: ExtendedRational) -> ExtendedRational:
    """Reduced mediant ``(a.num + b.num) / (a.den + b.den)`` of ``a < b``.

    The result lies strictly between ``a`` and ``b``.
    """
    if not a < b:
        raise ValueError(f"mediant needs a < b, got {a} and {b}")
    return ExtendedRational(a.num + b.num, a.den + b.den)


def parse(text: str) -> ExtendedRational:
    """Parse ``"p/q"`` (or a bare integer ``"p"``).  Decimals are rejected."""
    s = text.strip()
    if "/" in s:
        p, _, q = s.partition("/")
    else:
        p, q = s, "1"
    try:
        pi, qi = int(p), int(q)
    except ValueError:
        raise ValueError(f"malformed rational {text!r}; expected p/q") from None
    return ExtendedRational(pi, qi)
