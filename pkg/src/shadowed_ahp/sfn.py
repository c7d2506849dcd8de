"""Shadowed fuzzy numbers and their interval-style arithmetic.

An SFN is a four-tuple ``(s1, s2, s3, s4)``: the core ``[s2, s3]`` flanked by
the shadows ``[s1, s2]`` and ``[s3, s4]``. Arithmetic follows the endpoint
rules of interval arithmetic applied to the four abscissae.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import DomainError

# Denominator used for the rank index of a crisp (uncertainty-free) SFN.
DEGENERATE_EPS = 1e-9


@dataclass(frozen=True)
class SFN:
    s1: float
    s2: float
    s3: float
    s4: float

    def __post_init__(self):
        s = self.astuple()
        if not all(math.isfinite(v) for v in s):
            raise ValueError(f"SFN components must be finite, got {s}")
        if not (s[0] <= s[1] <= s[2] <= s[3]):
            raise ValueError(f"SFN components must be non-decreasing, got {s}")

    @classmethod
    def crisp(cls, v: float) -> "SFN":
        return cls(v, v, v, v)

    def astuple(self) -> Tuple[float, float, float, float]:
        return (self.s1, self.s2, self.s3, self.s4)

    def __iter__(self):
        return iter(self.astuple())

    @property
    def core(self) -> Tuple[float, float]:
        return (self.s2, self.s3)

    def contains(self, other: "SFN") -> bool:
        """True if ``other`` nests inside this SFN (support and core)."""
        return (self.s1 <= other.s1 and self.s2 <= other.s2
                and other.s3 <= self.s3 and other.s4 <= self.s4)

    def __add__(self, other: "SFN") -> "SFN":
        return add(self, other)

    def __sub__(self, other: "SFN") -> "SFN":
        return sub(self, other)

    def __mul__(self, other: "SFN") -> "SFN":
        return mul(self, other)

    def __truediv__(self, other: "SFN") -> "SFN":
        return div(self, other)


ZERO = SFN(0.0, 0.0, 0.0, 0.0)
ONE = SFN(1.0, 1.0, 1.0, 1.0)


def add(a: SFN, b: SFN) -> SFN:
    return SFN(a.s1 + b.s1, a.s2 + b.s2, a.s3 + b.s3, a.s4 + b.s4)


def sub(a: SFN, b: SFN) -> SFN:
    """Anti-aligned difference, defined only when ``a`` lies entirely above ``b``."""
    parts = (a.s1 - b.s4, a.s2 - b.s3, a.s3 - b.s2, a.s4 - b.s1)
    # anti-aligned endpoints are always ordered; the binding condition is s1 >= 0
    if parts[0] < 0 or not (parts[0] <= parts[1] <= parts[2] <= parts[3]):
        raise DomainError(f"subtraction {a.astuple()} - {b.astuple()} is not an SFN: {parts}")
    return SFN(*parts)


def mul(a: SFN, b: SFN) -> SFN:
    if a.s1 < 0 or b.s1 < 0:
        raise DomainError("multiplication needs non-negative SFNs")
    return SFN(a.s1 * b.s1, a.s2 * b.s2, a.s3 * b.s3, a.s4 * b.s4)


def div(a: SFN, b: SFN) -> SFN:
    if b.s1 <= 0:
        raise DomainError(f"divisor components must be strictly positive, got {b.astuple()}")
    if a.s1 < 0:
        raise DomainError("division needs a non-negative dividend")
    return SFN(a.s1 / b.s4, a.s2 / b.s3, a.s3 / b.s2, a.s4 / b.s1)


def nth_root(a: SFN, n: int) -> SFN:
    if n < 1:
        raise ValueError(f"root order must be a positive integer, got {n}")
    if a.s1 < 0:
        raise DomainError("root of an SFN with negative components")
    # x ** (1/n) is monotone, so ordering survives rounding
    return SFN(*(v ** (1.0 / n) for v in a))


def total(values: Iterable[SFN]) -> SFN:
    acc = ZERO
    for v in values:
        acc = add(acc, v)
    return acc


def product(values: Iterable[SFN]) -> SFN:
    acc = ONE
    for v in values:
        acc = mul(acc, v)
    return acc


@dataclass(frozen=True)
class RankBreakdown:
    C: float
    H: float
    f: float
    R: float
    degenerate: bool = False


def rank_index(a: SFN) -> RankBreakdown:
    """Center divided by non-specificity plus fuzziness; higher ranks first."""
    center = 0.5 * (a.s2 + a.s3)
    nonspec = math.log2(a.s3 - a.s2 + 1.0)
    fuzziness = (a.s2 - a.s1) + (a.s4 - a.s3)
    denom = nonspec + fuzziness
    if denom < DEGENERATE_EPS:
        return RankBreakdown(center, nonspec, fuzziness, center / DEGENERATE_EPS, True)
    return RankBreakdown(center, nonspec, fuzziness, center / denom)
