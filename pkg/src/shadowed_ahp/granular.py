"""Uncertain-number families used as pairwise comparison entries.

Five families are supported: crisp values, intervals, triangular fuzzy
numbers, Gaussian fuzzy numbers and triangular intuitionistic fuzzy numbers.
All values are immutable. The module also carries the 1..9 linguistic scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Mapping, Tuple, Union

Interval2 = Tuple[float, float]


class Family(str, Enum):
    CRISP = "crisp"
    INTERVAL = "iv"
    TFN = "tfn"
    GFN = "gfn"
    IFN = "ifn"


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")


def _positive(*values: float) -> None:
    if any(not v > 0 for v in values):
        raise ValueError(f"reciprocal requires strictly positive parameters, got {values}")


@dataclass(frozen=True)
class Crisp:
    v: float

    family = Family.CRISP

    def __post_init__(self):
        if not (math.isfinite(self.v) and self.v > 0):
            raise ValueError(f"crisp value must be positive, got {self.v}")

    def membership(self, x: float) -> float:
        return 1.0 if x == self.v else 0.0

    def alpha_cut(self, alpha: float) -> Interval2:
        _check_alpha(alpha)
        return (self.v, self.v)

    def reciprocal(self) -> "Crisp":
        return Crisp(1.0 / self.v)

    def modal(self) -> float:
        return self.v

    def params(self) -> Tuple[float, ...]:
        return (self.v,)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    family = Family.INTERVAL

    def __post_init__(self):
        if not (0 < self.lo <= self.hi and math.isfinite(self.hi)):
            raise ValueError(f"interval needs 0 < lo <= hi, got [{self.lo}, {self.hi}]")

    def membership(self, x: float) -> float:
        return 1.0 if self.lo <= x <= self.hi else 0.0

    def alpha_cut(self, alpha: float) -> Interval2:
        _check_alpha(alpha)
        return (self.lo, self.hi)

    def reciprocal(self) -> "Interval":
        return Interval(1.0 / self.hi, 1.0 / self.lo)

    def modal(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def params(self) -> Tuple[float, ...]:
        return (self.lo, self.hi)


@dataclass(frozen=True)
class TFN:
    """Triangular fuzzy number with support [a, c] and mode b."""

    a: float
    b: float
    c: float

    family = Family.TFN

    def __post_init__(self):
        if not (self.a <= self.b <= self.c):
            raise ValueError(f"TFN needs a <= b <= c, got ({self.a}, {self.b}, {self.c})")
        if not all(math.isfinite(p) for p in (self.a, self.b, self.c)):
            raise ValueError("TFN parameters must be finite")

    def membership(self, x: float) -> float:
        a, b, c = self.a, self.b, self.c
        if x == b:
            return 1.0
        if a < x < b:
            return (x - a) / (b - a)
        if b < x < c:
            return (c - x) / (c - b)
        return 0.0

    def alpha_cut(self, alpha: float) -> Interval2:
        _check_alpha(alpha)
        return (self.a + alpha * (self.b - self.a), self.c - alpha * (self.c - self.b))

    def reciprocal(self) -> "TFN":
        _positive(self.a, self.b, self.c)
        return TFN(1.0 / self.c, 1.0 / self.b, 1.0 / self.a)

    def modal(self) -> float:
        return self.b

    def params(self) -> Tuple[float, ...]:
        return (self.a, self.b, self.c)

    def shift(self, t: float) -> "TFN":
        return TFN(self.a + t, self.b + t, self.c + t)


@dataclass(frozen=True)
class GFN:
    """Gaussian fuzzy number exp(-(x - m)^2 / (2 sigma^2))."""

    m: float
    sigma: float

    family = Family.GFN

    def __post_init__(self):
        if not (self.m > 0 and math.isfinite(self.m)):
            raise ValueError(f"GFN center must be positive, got {self.m}")
        if not (self.sigma > 0 and math.isfinite(self.sigma)):
            raise ValueError(f"GFN spread must be positive, got {self.sigma}")

    def membership(self, x: float) -> float:
        z = (x - self.m) / self.sigma
        return math.exp(-0.5 * z * z)

    def alpha_cut(self, alpha: float) -> Interval2:
        _check_alpha(alpha)
        half = self.sigma * math.sqrt(2.0 * math.log(1.0 / alpha))
        return (self.m - half, self.m + half)

    def reciprocal(self) -> "GFN":
        # Spread is kept as is; only the center is inverted.
        return GFN(1.0 / self.m, self.sigma)

    def modal(self) -> float:
        return self.m

    def params(self) -> Tuple[float, ...]:
        return (self.m, self.sigma)


@dataclass(frozen=True)
class IFN:
    """Triangular intuitionistic fuzzy number.

    ``inner`` is the membership triangle mu and ``outer`` the triangle of
    1 - nu, so ``outer`` always encloses ``inner`` and both share the mode.
    """

    inner: TFN
    outer: TFN

    family = Family.IFN

    def __post_init__(self):
        i, o = self.inner, self.outer
        if not math.isclose(i.b, o.b, rel_tol=1e-12, abs_tol=1e-15):
            raise ValueError(f"IFN triangles must share the mode, got {i.b} and {o.b}")
        if not (o.a <= i.a and i.c <= o.c):
            raise ValueError(
                f"IFN outer triangle {o.params()} must enclose inner {i.params()}"
            )

    def membership(self, x: float) -> Tuple[float, float]:
        mu = self.inner.membership(x)
        upper = self.outer.membership(x)
        return (mu, max(mu, upper))

    def alpha_cut(self, alpha: float, upper: bool = False) -> Interval2:
        return (self.outer if upper else self.inner).alpha_cut(alpha)

    def reciprocal(self) -> "IFN":
        return IFN(self.inner.reciprocal(), self.outer.reciprocal())

    def modal(self) -> float:
        return self.inner.b

    def params(self) -> Tuple[float, ...]:
        return self.inner.params() + self.outer.params()


GranularValue = Union[Crisp, Interval, TFN, GFN, IFN]
GRANULAR_TYPES = (Crisp, Interval, TFN, GFN, IFN)


def membership(g: GranularValue, x: float) -> Tuple[float, float]:
    """Return ``(mu, 1 - nu)`` at ``x``; both are equal outside the IFN family."""
    if isinstance(g, IFN):
        return g.membership(x)
    d = g.membership(x)
    return (d, d)


def alpha_cut(g: GranularValue, alpha: float, upper: bool = False) -> Interval2:
    if isinstance(g, IFN):
        return g.alpha_cut(alpha, upper=upper)
    return g.alpha_cut(alpha)


def reciprocal(g: GranularValue) -> GranularValue:
    return g.reciprocal()


# --------------------------------------------------------------------------
# Linguistic scale
# --------------------------------------------------------------------------

LEVELS = range(1, 10)

_PRINTED: Dict[int, Dict[Family, GranularValue]] = {
    1: {
        Family.CRISP: Crisp(1),
        Family.INTERVAL: Interval(1, 2),
        Family.GFN: GFN(1, 0.5),
        Family.TFN: TFN(1, 1, 2),
        Family.IFN: IFN(TFN(0.5, 1, 2), TFN(0.2, 1, 3)),
    },
    3: {
        Family.CRISP: Crisp(3),
        Family.INTERVAL: Interval(1, 5),
        Family.GFN: GFN(3, 0.9),
        Family.TFN: TFN(1, 3, 5),
        Family.IFN: IFN(TFN(2, 3, 4), TFN(1, 3, 5)),
    },
    5: {
        Family.CRISP: Crisp(5),
        Family.INTERVAL: Interval(3, 7),
        Family.GFN: GFN(5, 0.9),
        Family.TFN: TFN(3, 5, 7),
        Family.IFN: IFN(TFN(4, 5, 6), TFN(3, 5, 7)),
    },
    7: {
        Family.CRISP: Crisp(7),
        Family.INTERVAL: Interval(5, 9),
        Family.GFN: GFN(7, 0.9),
        Family.TFN: TFN(5, 7, 9),
        Family.IFN: IFN(TFN(6, 7, 8), TFN(5, 7, 9)),
    },
    9: {
        Family.CRISP: Crisp(9),
        Family.INTERVAL: Interval(8, 10),
        Family.GFN: GFN(9, 0.5),
        Family.TFN: TFN(8, 9, 10),
        Family.IFN: IFN(TFN(8, 9, 9.5), TFN(7, 9, 10)),
    },
}

# Floor for the outer IFN triangle of the intermediate levels.
_IFN_FLOOR = 0.1


def _intermediate(level: int) -> Dict[Family, GranularValue]:
    lv = float(level)
    return {
        Family.CRISP: Crisp(lv),
        Family.INTERVAL: Interval(lv - 1, lv + 1),
        Family.GFN: GFN(lv, 0.9),
        Family.TFN: TFN(lv - 1, lv, lv + 1),
        Family.IFN: IFN(
            TFN(lv - 1, lv, lv + 1),
            TFN(max(lv - 2, _IFN_FLOOR), lv, lv + 2),
        ),
    }


class ScaleTable:
    """Map from (level, family) to the comparison value for that level.

    The odd levels follow the printed preference scale; levels 2, 4, 6 and 8
    interpolate their neighbours symmetrically. Any entry can be overridden.
    """

    def __init__(self, entries: Mapping[Tuple[int, Family], GranularValue] | None = None):
        table: Dict[Tuple[int, Family], GranularValue] = {}
        for level in LEVELS:
            row = _PRINTED.get(level) or _intermediate(level)
            for fam, value in row.items():
                table[(level, fam)] = value
        for (level, fam), value in (entries or {}).items():
            fam = Family(fam)
            if level not in LEVELS:
                raise ValueError(f"scale level must be in 1..9, got {level}")
            if value.family is not fam:
                raise ValueError(f"level {level}: {fam.value} entry has family {value.family.value}")
            table[(level, fam)] = value
        self._table = table
        # exact matches short-circuit the tolerance scan in level_of
        exact: Dict[GranularValue, float] = {}
        for (level, _fam), value in table.items():
            try:
                exact.setdefault(value.reciprocal(), 1.0 / level)
            except ValueError:
                pass
        for (level, _fam), value in table.items():
            exact[value] = float(level)
        self._exact = exact

    def lookup(self, level: int, family: Family | str) -> GranularValue:
        try:
            fam = Family(family)
        except ValueError:
            raise KeyError(f"unknown family {family!r}") from None
        try:
            return self._table[(level, fam)]
        except KeyError:
            raise KeyError(f"no scale entry for level {level!r}") from None

    def level_of(self, g: GranularValue) -> float | None:
        """Crisp level of ``g`` if it is a scale entry (L) or its reciprocal (1/L)."""
        hit = self._exact.get(g)
        if hit is not None:
            return hit
        for (level, fam), value in self._table.items():
            if fam is not g.family:
                continue
            if _same_params(value, g):
                return float(level)
        for (level, fam), value in self._table.items():
            if fam is not g.family:
                continue
            try:
                if _same_params(value.reciprocal(), g):
                    return 1.0 / level
            except ValueError:
                continue
        return None

    def items(self):
        return sorted(self._table.items(), key=lambda kv: (kv[0][0], list(Family).index(kv[0][1])))


def _same_params(u: GranularValue, v: GranularValue) -> bool:
    return all(math.isclose(p, q, rel_tol=1e-9, abs_tol=1e-12) for p, q in zip(u.params(), v.params()))


DEFAULT_SCALE = ScaleTable()


def scale_lookup(level: int, family: Family | str, scale: ScaleTable = DEFAULT_SCALE) -> GranularValue:
    return scale.lookup(level, family)


def crisp_projection(g: GranularValue, scale: ScaleTable = DEFAULT_SCALE) -> float:
    """Crisp value used for consistency checks.

    Scale entries map to their level, reciprocals of scale entries to
    1/level; anything else falls back to the modal point.
    """
    level = scale.level_of(g)
    if level is not None:
        return level
    return g.modal()
