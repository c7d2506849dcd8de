"""Induction of shadowed fuzzy numbers from granular values.

The core of a type-1 fuzzy number is the alpha-cut whose width balances the
Hartley non-specificity, ``width(alpha) + 1 = 2 ** H``. The flanking shadows
have widths equal to the cardinality of the fuzziness set on each side of the
mode. Intuitionistic numbers use the averaged non-specificity of their two
triangles for the core and the integrated entropy for the shadows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

from scipy import integrate, optimize

from .errors import NumericalError
from .granular import GFN, IFN, TFN, Crisp, GranularValue, Interval, Interval2
from .sfn import SFN

QUAD_TOL = 1e-8
ALPHA_LO = 1e-12
ALPHA_HI = 1.0 - 1e-12
BISECT_XTOL = 1e-14
BISECT_MAXITER = 200
GAUSS_REACH = 8.0


@dataclass(frozen=True)
class UncertaintyProfile:
    H: float
    alpha_star: float
    wL: float
    wR: float
    # alpha solved on the outer triangle; IFN conversions only
    alpha_outer: Optional[float] = None


def _quad(f: Callable[[float], float], lo: float, hi: float, tol: float,
          points: Optional[List[float]] = None) -> float:
    if hi <= lo:
        return 0.0
    if hi - lo <= 1e-12 * max(1.0, abs(hi)):
        # QUADPACK reports roundoff trouble on spans this short; midpoint is exact enough
        return f(0.5 * (lo + hi)) * (hi - lo)
    inner = sorted(p for p in (points or []) if lo < p < hi)
    value, _err = integrate.quad(f, lo, hi, epsabs=tol, epsrel=1e-10, limit=200,
                                 points=inner or None)
    return value


def _width(g: GranularValue, alpha: float) -> float:
    lo, hi = g.alpha_cut(alpha)
    return hi - lo


# --------------------------------------------------------------------------
# Non-specificity
# --------------------------------------------------------------------------

def hartley(g: GranularValue, tol: float = QUAD_TOL) -> float:
    """Hartley non-specificity in bits, the integral of log2(1 + cut width) over alpha."""
    if isinstance(g, Crisp):
        return 0.0
    if isinstance(g, Interval):
        return math.log2(1.0 + g.hi - g.lo)
    if isinstance(g, TFN):
        if g.c == g.a:
            return 0.0
        return _quad(lambda a: math.log2(1.0 + _width(g, a)), 0.0, 1.0, tol)
    if isinstance(g, GFN):
        # alpha = exp(-u^2) removes the infinite slope of the cut width at alpha -> 1
        k = 2.0 * math.sqrt(2.0) * g.sigma
        value, _err = integrate.quad(
            lambda u: math.log2(1.0 + k * u) * 2.0 * u * math.exp(-u * u),
            0.0, math.inf, epsabs=tol, epsrel=1e-10, limit=200,
        )
        return value
    raise TypeError(
        f"hartley needs a single membership function, got {type(g).__name__}; "
        "use avg_nonspecificity_ifn for intuitionistic numbers"
    )


def avg_nonspecificity_ifn(g: IFN, tol: float = QUAD_TOL) -> float:
    return 0.5 * (hartley(g.inner, tol) + hartley(g.outer, tol))


# --------------------------------------------------------------------------
# Cores
# --------------------------------------------------------------------------

def _solve_alpha(g: GranularValue, target: float) -> Optional[float]:
    """Alpha whose cut width equals ``target``; None if the support is too narrow."""
    f = lambda a: _width(g, a) - target  # noqa: E731
    f_lo = f(ALPHA_LO)
    if f_lo <= 0.0:
        return None
    if f(ALPHA_HI) >= 0.0:
        return ALPHA_HI
    try:
        return optimize.bisect(f, ALPHA_LO, ALPHA_HI, xtol=BISECT_XTOL,
                               maxiter=BISECT_MAXITER)
    except RuntimeError as exc:
        raise NumericalError(f"core level did not converge for {g}: {exc}") from exc


def core_interval_t1(g: GranularValue, tol: float = QUAD_TOL) -> Tuple[Interval2, float]:
    """Core interval and the alpha at which it is cut.

    Crisp values and intervals are their own core; the alpha is then reported
    as the lower bracket 1e-12.
    """
    if isinstance(g, Crisp):
        return (g.v, g.v), ALPHA_LO
    if isinstance(g, Interval):
        return (g.lo, g.hi), ALPHA_LO
    if isinstance(g, IFN):
        raise TypeError("use core_interval_ifn for intuitionistic numbers")
    if isinstance(g, TFN) and g.a == g.c:
        return (g.b, g.b), 1.0
    target = 2.0 ** hartley(g, tol) - 1.0
    alpha = _solve_alpha(g, target)
    if alpha is None:
        return g.alpha_cut(ALPHA_LO), ALPHA_LO
    return g.alpha_cut(alpha), alpha


def _ifn_core(g: IFN, tol: float) -> Tuple[Interval2, float, float, float]:
    h_avg = avg_nonspecificity_ifn(g, tol)
    target = 2.0 ** h_avg - 1.0
    cuts = []
    alphas = []
    for tri in (g.inner, g.outer):
        if tri.a == tri.c:
            cuts.append((tri.b, tri.b))
            alphas.append(1.0)
            continue
        alpha = _solve_alpha(tri, target)
        if alpha is None:
            # target wider than this triangle's support: take the whole support
            cuts.append((tri.a, tri.c))
            alphas.append(0.0)
        else:
            cuts.append(tri.alpha_cut(alpha))
            alphas.append(alpha)
    (l1, r1), (l2, r2) = cuts
    return (0.5 * (l1 + l2), 0.5 * (r1 + r2)), alphas[0], alphas[1], h_avg


def core_interval_ifn(g: IFN, tol: float = QUAD_TOL) -> Interval2:
    return _ifn_core(g, tol)[0]


# --------------------------------------------------------------------------
# Shadow widths
# --------------------------------------------------------------------------

def fuzz(mu: float) -> float:
    return 1.0 - abs(2.0 * mu - 1.0)


def _support(g: GranularValue) -> Interval2:
    if isinstance(g, GFN):
        return (g.m - GAUSS_REACH * g.sigma, g.m + GAUSS_REACH * g.sigma)
    if isinstance(g, TFN):
        return (g.a, g.c)
    if isinstance(g, IFN):
        return (g.outer.a, g.outer.c)
    if isinstance(g, Interval):
        return (g.lo, g.hi)
    return (g.v, g.v)


def fuzziness_widths(g: GranularValue, tol: float = QUAD_TOL) -> Tuple[float, float]:
    """Cardinality of the fuzziness set left and right of the mode."""
    if isinstance(g, (Crisp, Interval)):
        return (0.0, 0.0)
    if not isinstance(g, (TFN, GFN)):
        raise TypeError(f"fuzziness widths need a TFN or GFN, got {type(g).__name__}")
    lo, hi = _support(g)
    mode = g.modal()
    half_lo, half_hi = g.alpha_cut(0.5)
    f = lambda x: fuzz(g.membership(x))  # noqa: E731
    return (_quad(f, lo, mode, tol, [half_lo]), _quad(f, mode, hi, tol, [half_hi]))


def ifn_entropy(g: IFN, x: float) -> float:
    mu = g.inner.membership(x)
    nu = 1.0 - g.outer.membership(x)
    pi = 1.0 - mu - nu
    return (1.0 - abs(mu - nu) + pi) / (1.0 + pi)


def _crossing(g: IFN, lo: float, hi: float) -> List[float]:
    """Point in [lo, hi] where mu = nu, a kink of the entropy integrand."""
    if hi <= lo:
        return []
    d = lambda x: g.inner.membership(x) - 1.0 + g.outer.membership(x)  # noqa: E731
    d_lo, d_hi = d(lo), d(hi)
    if d_lo * d_hi >= 0:
        return []
    return [optimize.brentq(d, lo, hi, xtol=1e-14)]


def entropy_widths_ifn(g: IFN, tol: float = QUAD_TOL) -> Tuple[float, float]:
    """Integrated entropy of the IFN on each side of the mode."""
    o, i = g.outer, g.inner
    b = i.b
    f = lambda x: ifn_entropy(g, x)  # noqa: E731
    left_pts = [i.a] + _crossing(g, o.a, b)
    right_pts = [i.c] + _crossing(g, b, o.c)
    return (_quad(f, o.a, b, tol, left_pts), _quad(f, b, o.c, tol, right_pts))


# --------------------------------------------------------------------------
# Assembly
# --------------------------------------------------------------------------

def _assemble(core: Interval2, wL: float, wR: float) -> SFN:
    cl, cr = core
    return SFN(*(max(0.0, s) for s in (cl - wL, cl, cr, cr + wR)))


@lru_cache(maxsize=4096)
def to_sfn_with_profile(g: GranularValue, tol: float = QUAD_TOL) -> Tuple[SFN, UncertaintyProfile]:
    if isinstance(g, Crisp):
        return SFN(g.v, g.v, g.v, g.v), UncertaintyProfile(0.0, ALPHA_LO, 0.0, 0.0)
    if isinstance(g, Interval):
        return (SFN(g.lo, g.lo, g.hi, g.hi),
                UncertaintyProfile(hartley(g), ALPHA_LO, 0.0, 0.0))
    if isinstance(g, (TFN, GFN)):
        core, alpha = core_interval_t1(g, tol)
        wL, wR = fuzziness_widths(g, tol)
        return _assemble(core, wL, wR), UncertaintyProfile(hartley(g, tol), alpha, wL, wR)
    if isinstance(g, IFN):
        core, a_in, a_out, h_avg = _ifn_core(g, tol)
        wL, wR = entropy_widths_ifn(g, tol)
        return _assemble(core, wL, wR), UncertaintyProfile(h_avg, a_in, wL, wR, a_out)
    raise TypeError(f"not a granular value: {g!r}")


def to_sfn(g: GranularValue, tol: float = QUAD_TOL) -> SFN:
    return to_sfn_with_profile(g, tol)[0]


# --------------------------------------------------------------------------
# Three-region shadowed set diagnostic
# --------------------------------------------------------------------------

def balance_index(g: GranularValue, alpha: float, tol: float = QUAD_TOL) -> float:
    """|r1 + r2 - r3| for the three-region shadowed set induced at ``alpha``.

    r1 is the membership removed by zeroing values below alpha, r2 the
    membership added by raising values above 1 - alpha, r3 the length of the
    shadow where alpha <= mu <= 1 - alpha.
    """
    lo, hi = _support(g)
    lo_a, hi_a = g.alpha_cut(alpha)
    lo_c, hi_c = g.alpha_cut(1.0 - alpha)
    mu = g.membership
    r1 = _quad(mu, lo, lo_a, tol) + _quad(mu, hi_a, hi, tol)
    r2 = _quad(lambda x: 1.0 - mu(x), lo_c, hi_c, tol, [g.modal()])
    r3 = (lo_c - lo_a) + (hi_a - hi_c)
    return abs(r1 + r2 - r3)


def pedrycz_optimal_alpha(g: GranularValue, tol: float = QUAD_TOL) -> float:
    if isinstance(g, (Crisp, Interval)):
        return 0.25
    if not isinstance(g, (TFN, GFN)):
        raise TypeError(f"optimal alpha needs a TFN or GFN, got {type(g).__name__}")
    res = optimize.minimize_scalar(
        lambda a: balance_index(g, a, tol), bounds=(1e-9, 0.5 - 1e-9),
        method="bounded", options={"xatol": 1e-10},
    )
    return float(res.x)
