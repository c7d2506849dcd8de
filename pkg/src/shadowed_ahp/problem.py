"""Plain-text problem files and the entry grammar.

A problem file looks like::

    problem: supplier selection
    criteria: C1 C2 C3 C4
    alternatives: A1 A2 A3
    options:
      mode: formula
      cr-threshold: 0.1
    matrix criteria:
      C1 C2 tfn(1/7, 1/5, 1/3)
      C1 C3 iv(1, 5)
    matrix C1:
      A1 A2 gfn(1/7, 0.9)

Only one triangle of each matrix is required in formula mode; the other is
filled with reciprocals. Replay mode takes full matrices of ``sfn(...)``
entries. ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .ahp import FORMULA, MODES, REPLAY, ComparisonMatrix, DecisionProblem, Entry
from .errors import ParseError
from .granular import GFN, IFN, TFN, Crisp, Interval, LEVELS, ScaleTable
from .sfn import ONE, SFN
from .shadow import QUAD_TOL

_NUMBER = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?(/\d+(\.\d*)?)?$")
_ENTRY = re.compile(r"^\s*([A-Za-z]+)\s*\((.*)\)\s*$")
_ARITY = {"crisp": 1, "iv": 2, "tfn": 3, "gfn": 2, "sfn": 4}
_IDENT = re.compile(r"^[A-Za-z_][\w.\-]*$")

CRITERIA_MATRIX = "criteria"


def parse_number(text: str, line: Optional[int] = None, column: Optional[int] = None) -> float:
    """Parse a decimal or ``p/q`` fraction exactly, then round once to float."""
    t = text.strip()
    if not _NUMBER.match(t):
        raise ParseError(f"invalid number {text.strip()!r}", line, column)
    num, _, den = t.partition("/")
    try:
        return float(Fraction(num) / Fraction(den)) if den else float(Fraction(num))
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {t!r}", line, column) from None


def _numbers(body: str, line, column) -> List[float]:
    parts = body.split(",")
    if any(not p.strip() for p in parts):
        raise ParseError("empty argument", line, column)
    return [parse_number(p, line, column) for p in parts]


def parse_entry(text: str, line: Optional[int] = None, column: Optional[int] = None) -> Entry:
    m = _ENTRY.match(text)
    if not m:
        raise ParseError(f"expected kind(args), got {text.strip()!r}", line, column)
    kind, body = m.group(1).lower(), m.group(2)
    arg_col = None if column is None else column + text.index("(") + 1
    try:
        if kind == "ifn":
            groups = body.split(";")
            if len(groups) != 2:
                raise ParseError("ifn takes two ';'-separated triangles", line, arg_col)
            inner, outer = (_numbers(g, line, arg_col) for g in groups)
            if len(inner) != 3 or len(outer) != 3:
                raise ParseError("ifn triangles take 3 numbers each", line, arg_col)
            return IFN(TFN(*inner), TFN(*outer))
        if kind not in _ARITY:
            raise ParseError(f"unknown entry kind {kind!r}", line, column)
        args = _numbers(body, line, arg_col)
        if len(args) != _ARITY[kind]:
            raise ParseError(
                f"{kind} takes {_ARITY[kind]} argument(s), got {len(args)}", line, arg_col
            )
        return {"crisp": Crisp, "iv": Interval, "tfn": TFN, "gfn": GFN, "sfn": SFN}[kind](*args)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), line, column) from None


def _num(x: float) -> str:
    return repr(float(x))


def format_entry(e: Entry) -> str:
    if isinstance(e, IFN):
        return "ifn({}; {})".format(", ".join(map(_num, e.inner.params())),
                                    ", ".join(map(_num, e.outer.params())))
    if isinstance(e, SFN):
        return "sfn({})".format(", ".join(map(_num, e.astuple())))
    return "{}({})".format(e.family.value, ", ".join(map(_num, e.params())))


# --------------------------------------------------------------------------
# Problem files
# --------------------------------------------------------------------------

_OPTION_KEYS = {"mode", "cr-threshold", "cr-policy", "quad-tol"}


def _labels(value: str, lineno: int, what: str) -> Tuple[str, ...]:
    labels = tuple(value.split())
    if not labels:
        raise ParseError(f"empty {what} list", lineno)
    for lab in labels:
        if not _IDENT.match(lab) or lab == CRITERIA_MATRIX:
            raise ParseError(f"invalid label {lab!r}", lineno)
    if len(set(labels)) != len(labels):
        raise ParseError(f"duplicate label in {what} list", lineno)
    return labels


def _complete(name: str, labels: Tuple[str, ...], cells: Dict[Tuple[int, int], Entry],
              mode: str) -> ComparisonMatrix:
    n = len(labels)
    unit = ONE if mode == REPLAY else Crisp(1.0)
    rows: List[List[Entry]] = [[unit] * n for _ in range(n)]
    for (i, j), e in cells.items():
        rows[i][j] = e
    for i in range(n):
        for j in range(i + 1, n):
            have_u, have_l = (i, j) in cells, (j, i) in cells
            if have_u and have_l:
                continue
            if not (have_u or have_l):
                raise ParseError(
                    f"matrix {name!r}: no comparison given for ({labels[i]}, {labels[j]})"
                )
            if mode == REPLAY:
                raise ParseError(
                    f"matrix {name!r}: replay mode needs both ({labels[i]}, {labels[j]}) "
                    "and its mirror cell"
                )
            if have_u:
                rows[j][i] = rows[i][j].reciprocal()
            else:
                rows[i][j] = rows[j][i].reciprocal()
    return ComparisonMatrix.from_rows(labels, rows, name)


def parse_problem_file(text: str, mode: Optional[str] = None) -> DecisionProblem:
    """Parse a problem file. ``mode`` overrides the file's ``mode`` option."""
    name = ""
    criteria: Optional[Tuple[str, ...]] = None
    alternatives: Optional[Tuple[str, ...]] = None
    options: Dict[str, str] = {}
    blocks: Dict[str, Dict[Tuple[int, int], Entry]] = {}
    block_lines: Dict[str, int] = {}
    section: Optional[str] = None  # "options" or "matrix:<name>"
    current: Optional[str] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        stripped = line.strip()

        head = re.match(r"^(problem|criteria|alternatives|options)\s*:\s*(.*)$", stripped)
        mhead = re.match(r"^matrix\s+(\S+)\s*:\s*$", stripped)
        if head and not (section == "options" and indent > 0):
            key, value = head.group(1), head.group(2).strip()
            section = current = None
            if key == "problem":
                name = value
            elif key == "criteria":
                if criteria is not None:
                    raise ParseError("criteria declared twice", lineno)
                criteria = _labels(value, lineno, "criteria")
            elif key == "alternatives":
                if alternatives is not None:
                    raise ParseError("alternatives declared twice", lineno)
                alternatives = _labels(value, lineno, "alternatives")
            else:
                if value:
                    raise ParseError("options: takes no inline value", lineno, indent + 1)
                section = "options"
            continue
        if mhead:
            current = mhead.group(1)
            section = "matrix"
            if current in blocks:
                raise ParseError(f"matrix {current!r} declared twice", lineno)
            if current != CRITERIA_MATRIX and (criteria is None or current not in criteria):
                raise ParseError(f"matrix for undeclared criterion {current!r}", lineno, indent + 8)
            blocks[current] = {}
            block_lines[current] = lineno
            continue

        if section == "options":
            om = re.match(r"^([\w-]+)\s*:\s*(\S+)$", stripped)
            if not om:
                raise ParseError(f"expected 'key: value', got {stripped!r}", lineno, indent + 1)
            key = om.group(1)
            if key not in _OPTION_KEYS:
                raise ParseError(f"unknown option {key!r}", lineno, indent + 1)
            options[key] = om.group(2)
            continue

        if section != "matrix":
            raise ParseError(f"unexpected line {stripped!r}", lineno, indent + 1)

        parts = stripped.split(None, 2)
        if len(parts) != 3:
            raise ParseError("expected 'ROW COL value'", lineno, indent + 1)
        labels = criteria if current == CRITERIA_MATRIX else alternatives
        if labels is None:
            what = "criteria" if current == CRITERIA_MATRIX else "alternatives"
            raise ParseError(f"{what} must be declared before matrix {current!r}", lineno)
        row, col, value = parts
        for lab in (row, col):
            if lab not in labels:
                raise ParseError(f"undeclared label {lab!r} in matrix {current!r}",
                                 lineno, line.index(lab) + 1)
        cell = (labels.index(row), labels.index(col))
        if cell in blocks[current]:
            raise ParseError(f"duplicate cell ({row}, {col}) in matrix {current!r}", lineno)
        blocks[current][cell] = parse_entry(value, lineno, line.index(value) + 1)

    if criteria is None:
        raise ParseError("missing criteria declaration")
    if alternatives is None:
        raise ParseError("missing alternatives declaration")

    file_mode = options.get("mode", FORMULA)
    if file_mode not in MODES:
        raise ParseError(f"unknown mode {file_mode!r}")
    mode = mode or file_mode
    if mode not in MODES:
        raise ParseError(f"unknown mode {mode!r}")
    cr_policy = options.get("cr-policy", "error")
    if cr_policy not in ("error", "warn"):
        raise ParseError(f"unknown cr-policy {cr_policy!r}")
    cr_threshold = parse_number(options.get("cr-threshold", "0.1"))
    quad_tol = parse_number(options["quad-tol"]) if "quad-tol" in options else QUAD_TOL
    if not quad_tol > 0:
        raise ParseError("quad-tol must be positive")

    for mname, cells in blocks.items():
        for cell, e in cells.items():
            if (mode == REPLAY) != isinstance(e, SFN):
                want = "sfn(...)" if mode == REPLAY else "granular"
                raise ParseError(f"matrix {mname!r} cell {cell}: {mode} mode takes {want} entries",
                                 block_lines[mname])

    missing = [c for c in (CRITERIA_MATRIX,) + criteria if c not in blocks]
    if missing:
        raise ParseError(f"missing matrix block(s): {', '.join(missing)}")

    crit = _complete(CRITERIA_MATRIX, criteria, blocks[CRITERIA_MATRIX], mode)
    alts = tuple(_complete(c, alternatives, blocks[c], mode) for c in criteria)
    return DecisionProblem(
        criteria=criteria,
        alternatives=alternatives,
        criteria_matrix=crit,
        alternative_matrices=alts,
        mode=mode,
        name=name,
        cr_threshold=cr_threshold,
        cr_policy=cr_policy,
        quad_tol=quad_tol,
    )


def format_problem(p: DecisionProblem) -> str:
    """Serialize a problem; every off-diagonal cell is written explicitly."""
    out = []
    if p.name:
        out.append(f"problem: {p.name}")
    out.append("criteria: " + " ".join(p.criteria))
    out.append("alternatives: " + " ".join(p.alternatives))
    out.append("options:")
    out.append(f"  mode: {p.mode}")
    out.append(f"  cr-threshold: {_num(p.cr_threshold)}")
    out.append(f"  cr-policy: {p.cr_policy}")
    out.append(f"  quad-tol: {_num(p.quad_tol)}")
    for m in (p.criteria_matrix,) + tuple(p.alternative_matrices):
        out.append(f"matrix {m.name}:")
        for i, ri in enumerate(m.labels):
            for j, cj in enumerate(m.labels):
                if i != j:
                    out.append(f"  {ri} {cj} {format_entry(m[i, j])}")
    return "\n".join(out) + "\n"


def parse_scale_file(text: str) -> ScaleTable:
    """Scale overrides, one ``LEVEL entry`` per line; unlisted pairs keep defaults."""
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if len(parts) != 2 or not parts[0].isdigit() or int(parts[0]) not in LEVELS:
            raise ParseError("expected 'LEVEL entry' with LEVEL in 1..9", lineno)
        e = parse_entry(parts[1], lineno, raw.index(parts[1]) + 1)
        if isinstance(e, SFN):
            raise ParseError("scale entries cannot be sfn(...)", lineno)
        key = (int(parts[0]), e.family)
        if key in entries:
            raise ParseError(f"duplicate scale entry for level {key[0]} {key[1].value}", lineno)
        entries[key] = e
    return ScaleTable(entries)


def with_overrides(p: DecisionProblem, **kw) -> DecisionProblem:
    kw = {k: v for k, v in kw.items() if v is not None}
    return replace(p, **kw) if kw else p
