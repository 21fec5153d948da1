"""Exact ratio bounds and cost-vs-ratio comparison.

Everything on the certification path is integer arithmetic.  Products are
checked against the signed 64-bit range so that a result which would have
wrapped in a fixed-width implementation is reported instead of trusted.
"""

from __future__ import annotations

import enum
import functools
import math
import re
from dataclasses import dataclass

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

_RATIO_RE = re.compile(r"^([0-9]+)/([0-9]+)$")


def checked(value: int) -> int:
    """Return `value` unchanged, raising OverflowError outside int64."""
    if value > INT64_MAX or value < INT64_MIN:
        raise OverflowError(f"integer {value} does not fit in 64 bits")
    return value


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@functools.total_ordering
@dataclass(frozen=True)
class Ratio:
    """A positive rational bound p/q, always stored in lowest terms."""

    p: int
    q: int

    def __post_init__(self):
        if isinstance(self.p, bool) or isinstance(self.q, bool):
            raise TypeError("ratio terms must be integers")
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("ratio terms must be integers")
        if self.p < 1 or self.q < 1:
            raise ValueError(f"ratio terms must be positive, got {self.p}/{self.q}")
        g = math.gcd(self.p, self.q)
        if g != 1:
            object.__setattr__(self, "p", self.p // g)
            object.__setattr__(self, "q", self.q // g)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __lt__(self, other: Ratio) -> bool:
        if not isinstance(other, Ratio):
            return NotImplemented
        return self.p * other.q < other.p * self.q

    @classmethod
    def parse(cls, text: str) -> Ratio:
        """Parse the ``P/Q`` text form.  Decimals and signs are rejected."""
        match = _RATIO_RE.match(text.strip())
        if match is None:
            raise ValueError(f"ratio must look like P/Q with integer P and Q, got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))


def make_ratio(p: int, q: int) -> Ratio:
    return Ratio(p, q)


def compare_cost_ratio(cost: int, opt: int, r: Ratio) -> Ordering:
    """Position of cost/opt relative to r, by exact cross-multiplication.

    Returns the sign of ``cost*r.q - opt*r.p``.  ``opt`` may be zero only
    together with ``cost``.
    """
    if cost < 0 or opt < 0:
        raise ValueError("costs must be non-negative")
    if opt == 0 and cost != 0:
        raise ValueError("a positive cost cannot be compared against a zero optimum")
    lhs = checked(cost * r.q)
    rhs = checked(opt * r.p)
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL
