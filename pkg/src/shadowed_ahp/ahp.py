"""Shadowed AHP pipeline.

Comparison matrices of granular values are checked for reciprocity and
consistency on their crisp projections, converted entrywise to SFNs, reduced
to row geometric means, normalized into weights and priorities, synthesized
into final preferences and ranked by the rank index.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (ConsistencyError, ConversionError, DomainError,
                     NumericalError, ValidationError)
from .granular import DEFAULT_SCALE, GRANULAR_TYPES, Crisp, GranularValue, ScaleTable, crisp_projection
from .sfn import ONE, SFN, RankBreakdown, div, mul, nth_root, product, rank_index, total
from .shadow import QUAD_TOL, to_sfn

log = logging.getLogger(__name__)

Entry = Union[GranularValue, SFN]

FORMULA = "formula"
REPLAY = "replay"
MODES = (FORMULA, REPLAY)

# Saaty's random consistency index for n = 1..10
RANDOM_INDEX = (0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49)

RECIPROCAL_TOL = 1e-9
POWER_TOL = 1e-10
POWER_MAXITER = 10000


@dataclass(frozen=True)
class ComparisonMatrix:
    labels: Tuple[str, ...]
    entries: Tuple[Tuple[Entry, ...], ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.labels)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValidationError(
                f"matrix {self.name!r}: expected {n}x{n} entries for labels {list(self.labels)}"
            )

    @classmethod
    def from_rows(cls, labels: Sequence[str], rows: Sequence[Sequence[Entry]], name: str = ""):
        return cls(tuple(labels), tuple(tuple(r) for r in rows), name)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def is_replay(self) -> bool:
        return any(isinstance(e, SFN) for row in self.entries for e in row)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def permuted(self, order: Sequence[int]) -> "ComparisonMatrix":
        return ComparisonMatrix(
            tuple(self.labels[i] for i in order),
            tuple(tuple(self.entries[i][j] for j in order) for i in order),
            self.name,
        )


@dataclass(frozen=True)
class Violation:
    cell: Tuple[int, int]
    labels: Tuple[str, str]
    message: str


@dataclass(frozen=True)
class ReciprocityReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class DecisionProblem:
    criteria: Tuple[str, ...]
    alternatives: Tuple[str, ...]
    criteria_matrix: ComparisonMatrix
    alternative_matrices: Tuple[ComparisonMatrix, ...]
    mode: str = FORMULA
    name: str = ""
    cr_threshold: float = 0.1
    cr_policy: str = "error"
    quad_tol: float = QUAD_TOL

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError(f"unknown mode {self.mode!r}")
        if self.cr_policy not in ("error", "warn"):
            raise ValidationError(f"unknown consistency policy {self.cr_policy!r}")
        if tuple(self.criteria_matrix.labels) != tuple(self.criteria):
            raise ValidationError("criteria matrix labels do not match the criteria list")
        if len(self.alternative_matrices) != len(self.criteria):
            raise ValidationError(
                f"expected {len(self.criteria)} alternative matrices, got {len(self.alternative_matrices)}"
            )
        for crit, m in zip(self.criteria, self.alternative_matrices):
            if tuple(m.labels) != tuple(self.alternatives):
                raise ValidationError(f"matrix {crit!r}: labels do not match the alternatives list")

    def permute_alternatives(self, order: Sequence[int]) -> "DecisionProblem":
        return DecisionProblem(
            self.criteria,
            tuple(self.alternatives[i] for i in order),
            self.criteria_matrix,
            tuple(m.permuted(order) for m in self.alternative_matrices),
            self.mode, self.name, self.cr_threshold, self.cr_policy, self.quad_tol,
        )


@dataclass
class Ranking:
    order: List[int]
    breakdowns: List[RankBreakdown]
    ties: List[Tuple[int, int]]


@dataclass
class DecisionResult:
    criteria: Tuple[str, ...]
    alternatives: Tuple[str, ...]
    consistency_ratios: Dict[str, Optional[float]]
    criteria_sfn: List[List[SFN]]
    alternative_sfn: List[List[List[SFN]]]
    criteria_means: List[SFN]
    weights: List[SFN]
    alternative_means: List[List[SFN]]
    priorities: List[List[SFN]]
    preferences: List[SFN]
    breakdowns: List[RankBreakdown]
    ordering: List[int]
    ties: List[Tuple[int, int]] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def order_labels(self) -> List[str]:
        return [self.alternatives[i] for i in self.ordering]

    def order_string(self) -> str:
        return format_order(self.alternatives, self.ordering, self.ties)


def format_order(labels: Sequence[str], order: Sequence[int], ties: Sequence[Tuple[int, int]]) -> str:
    """Descending order, with ``=`` joining tied neighbours."""
    tied = {frozenset(t) for t in ties}
    out = labels[order[0]]
    for prev, cur in zip(order, order[1:]):
        out += (" = " if frozenset((prev, cur)) in tied else " > ") + labels[cur]
    return out


# --------------------------------------------------------------------------
# Validation and consistency
# --------------------------------------------------------------------------

def _is_unit(e: Entry) -> bool:
    if isinstance(e, SFN):
        return e == ONE
    return isinstance(e, Crisp) and e.v == 1.0


def validate_reciprocal(m: ComparisonMatrix, scale: ScaleTable = DEFAULT_SCALE) -> ReciprocityReport:
    """Check unit diagonal and crisp-level reciprocity of a comparison matrix.

    SFN (replay) cells carry no crisp level, so only their diagonal is checked.
    """
    bad: List[Violation] = []
    for i in range(m.n):
        if not _is_unit(m[i, i]):
            bad.append(Violation((i, i), (m.labels[i], m.labels[i]), "diagonal entry is not crisp 1"))
    for i in range(m.n):
        for j in range(i + 1, m.n):
            u, v = m[i, j], m[j, i]
            if isinstance(u, SFN) or isinstance(v, SFN):
                continue
            pu, pv = crisp_projection(u, scale), crisp_projection(v, scale)
            if not math.isclose(pv, 1.0 / pu, rel_tol=RECIPROCAL_TOL, abs_tol=RECIPROCAL_TOL):
                bad.append(Violation(
                    (j, i), (m.labels[j], m.labels[i]),
                    f"crisp level {pv:g} is not the reciprocal of {pu:g}",
                ))
    return ReciprocityReport(tuple(bad))


def crisp_matrix(m: ComparisonMatrix, scale: ScaleTable = DEFAULT_SCALE) -> np.ndarray:
    return np.array([[crisp_projection(e, scale) for e in row] for row in m.entries], dtype=float)


def principal_eigenvalue(a: np.ndarray, tol: float = POWER_TOL, maxiter: int = POWER_MAXITER) -> float:
    """Perron eigenvalue of a positive matrix by power iteration."""
    n = a.shape[0]
    w = np.full(n, 1.0 / n)
    lam = 0.0
    for _ in range(maxiter):
        v = a @ w
        lam_new = float(v.sum())  # w sums to 1
        w = v / lam_new
        if abs(lam_new - lam) < tol:
            return lam_new
        lam = lam_new
    raise NumericalError(f"power iteration did not converge in {maxiter} iterations")


def consistency_ratio(m: ComparisonMatrix, scale: ScaleTable = DEFAULT_SCALE,
                      random_index: Optional[Sequence[float]] = None) -> float:
    n = m.n
    ri_table = tuple(random_index) if random_index is not None else RANDOM_INDEX
    if n > len(ri_table):
        raise ValidationError(f"no random index for n = {n}; supply one explicitly")
    if n < 3:
        return 0.0
    lam = principal_eigenvalue(crisp_matrix(m, scale))
    ci = (lam - n) / (n - 1)
    return max(ci, 0.0) / ri_table[n - 1]


# --------------------------------------------------------------------------
# Conversion and reduction
# --------------------------------------------------------------------------

def convert_matrix(m: ComparisonMatrix, tol: float = QUAD_TOL) -> List[List[SFN]]:
    out = []
    for i, row in enumerate(m.entries):
        converted = []
        for j, e in enumerate(row):
            if isinstance(e, SFN):
                converted.append(e)
                continue
            if not isinstance(e, GRANULAR_TYPES):
                raise ConversionError(f"unsupported entry {e!r}", m.name, (m.labels[i], m.labels[j]))
            try:
                converted.append(to_sfn(e, tol))
            except (NumericalError, ValueError, ArithmeticError) as exc:
                raise ConversionError(str(exc), m.name, (m.labels[i], m.labels[j])) from exc
        out.append(converted)
    return out


def geometric_mean_rows(s: Sequence[Sequence[SFN]]) -> List[SFN]:
    n = len(s)
    return [nth_root(product(row), n) for row in s]


def normalize(g: Sequence[SFN]) -> List[SFN]:
    denom = total(g)
    if min(denom.astuple()) <= 0:
        raise NumericalError(f"cannot normalize: component sum {denom.astuple()} is not positive")
    try:
        return [div(gi, denom) for gi in g]
    except DomainError as exc:
        raise NumericalError(f"cannot normalize: {exc}") from exc


def synthesize(wg: Sequence[SFN], wa: Sequence[Sequence[SFN]]) -> List[SFN]:
    """Weighted sum of per-criterion priorities, ``P_i = sum_j wg_j * wa_j,i``."""
    if len(wg) != len(wa):
        raise ValidationError(f"{len(wg)} weights but {len(wa)} priority rows")
    m = len(wa[0]) if wa else 0
    if any(len(row) != m for row in wa):
        raise ValidationError("priority rows have different lengths")
    return [total(mul(wg[j], wa[j][i]) for j in range(len(wg))) for i in range(m)]


def rank_alternatives(p: Sequence[SFN]) -> Ranking:
    """Sort by rank index, descending; ties broken by center, then input order."""
    if not p:
        raise ValidationError("nothing to rank")
    breakdowns = [rank_index(x) for x in p]
    order = sorted(range(len(p)), key=lambda i: (-breakdowns[i].R, -breakdowns[i].C, i))
    ties = []
    for a, b in zip(order, order[1:]):
        if math.isclose(breakdowns[a].R, breakdowns[b].R, rel_tol=1e-12, abs_tol=1e-15):
            ties.append((a, b))
    return Ranking(order, breakdowns, ties)


# --------------------------------------------------------------------------
# Driver
# --------------------------------------------------------------------------

def _check_matrix(m: ComparisonMatrix, problem: DecisionProblem, scale: ScaleTable,
                  warnings: List[str]) -> Optional[float]:
    report = validate_reciprocal(m, scale)
    if not report.ok:
        first = report.violations[0]
        raise ValidationError(
            f"matrix {m.name!r} is not reciprocal at {first.labels}: {first.message}"
        )
    if problem.mode == REPLAY or m.is_replay:
        return None
    cr = consistency_ratio(m, scale)
    if cr >= problem.cr_threshold:
        if problem.cr_policy == "error":
            raise ConsistencyError(m.name, cr, problem.cr_threshold)
        msg = f"matrix {m.name!r}: consistency ratio {cr:.4f} >= {problem.cr_threshold}"
        log.warning(msg)
        warnings.append(msg)
    return cr


def solve(problem: DecisionProblem, scale: ScaleTable = DEFAULT_SCALE) -> DecisionResult:
    warnings: List[str] = []
    matrices = (problem.criteria_matrix,) + tuple(problem.alternative_matrices)
    if problem.mode == REPLAY:
        for m in matrices:
            if not all(isinstance(e, SFN) for row in m.entries for e in row):
                raise ValidationError(f"matrix {m.name!r}: replay mode needs sfn(...) entries")
    elif any(m.is_replay for m in matrices):
        raise ValidationError("sfn(...) entries are only allowed in replay mode")

    crs = {m.name: _check_matrix(m, problem, scale, warnings) for m in matrices}

    tol = problem.quad_tol
    crit_sfn = convert_matrix(problem.criteria_matrix, tol)
    alt_sfn = [convert_matrix(m, tol) for m in problem.alternative_matrices]

    crit_means = geometric_mean_rows(crit_sfn)
    weights = normalize(crit_means)
    alt_means = [geometric_mean_rows(s) for s in alt_sfn]
    priorities = [normalize(g) for g in alt_means]
    prefs = synthesize(weights, priorities)
    ranking = rank_alternatives(prefs)

    return DecisionResult(
        criteria=tuple(problem.criteria),
        alternatives=tuple(problem.alternatives),
        consistency_ratios=crs,
        criteria_sfn=crit_sfn,
        alternative_sfn=alt_sfn,
        criteria_means=crit_means,
        weights=weights,
        alternative_means=alt_means,
        priorities=priorities,
        preferences=prefs,
        breakdowns=ranking.breakdowns,
        ordering=ranking.order,
        ties=ranking.ties,
        warnings=warnings,
    )
