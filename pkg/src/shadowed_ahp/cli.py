"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse error, 2 validation or consistency
failure, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from .ahp import MODES, DecisionResult, format_order, rank_alternatives, solve
from .errors import NumericalError, ParseError, ValidationError
from .granular import DEFAULT_SCALE
from .problem import parse_entry, parse_problem_file, parse_scale_file, with_overrides
from .sfn import SFN
from .shadow import to_sfn_with_profile

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

_Q = Decimal("0.0001")


def fmt(x: float) -> str:
    """Four decimals, half-even on the shortest decimal form of ``x``."""
    d = Decimal(repr(float(x))).quantize(_Q, rounding=ROUND_HALF_EVEN)
    if d.is_zero():
        d = abs(d)
    return str(d)


def _full(x: float) -> str:
    return repr(float(x))


def fmt_sfn(s: SFN, machine: bool = False) -> str:
    f = _full if machine else fmt
    return " ".join(f(v) for v in s)


def _tuple(s: SFN) -> str:
    return "(" + ", ".join(fmt(v) for v in s) + ")"


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    cols = [list(header)] + [list(r) for r in rows]
    widths = [max(len(r[k]) for r in cols) for k in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cols]


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------

def cmd_convert(entry: str, machine: bool = False, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    g = parse_entry(entry)
    if isinstance(g, SFN):
        raise ParseError("convert takes a granular entry, not sfn(...)")
    s, prof = to_sfn_with_profile(g)
    f = _full if machine else fmt
    print(fmt_sfn(s, machine), file=out)
    line = f"H={f(prof.H)} alpha*={f(prof.alpha_star)} wL={f(prof.wL)} wR={f(prof.wR)}"
    if prof.alpha_outer is not None:
        line += f" alpha*_outer={f(prof.alpha_outer)}"
    print(line, file=out)
    return EXIT_OK


def cmd_rank(entries: Sequence[str], machine: bool = False, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    if not entries:
        raise ParseError("rank needs at least one sfn(...) argument")
    values = []
    for k, text in enumerate(entries, start=1):
        e = parse_entry(text)
        if not isinstance(e, SFN):
            raise ParseError(f"argument {k}: rank takes sfn(...) entries")
        values.append(e)
    ranking = rank_alternatives(values)
    labels = [str(k) for k in range(1, len(values) + 1)]
    if machine:
        for lab, b in zip(labels, ranking.breakdowns):
            print(f"rank {lab} {_full(b.C)} {_full(b.H)} {_full(b.f)} {_full(b.R)}", file=out)
    else:
        rows = [[lab, fmt(b.C), fmt(b.H), fmt(b.f), fmt(b.R) + (" *" if b.degenerate else "")]
                for lab, b in zip(labels, ranking.breakdowns)]
        for line in _table(["#", "C", "H", "f", "R"], rows):
            print(line, file=out)
        if any(b.degenerate for b in ranking.breakdowns):
            print("* crisp input: R uses the 1e-9 denominator; compare centers", file=out)
    print(format_order(labels, ranking.order, ranking.ties), file=out)
    return EXIT_OK


def report_lines(result: DecisionResult, title: str = "", mode: str = "") -> List[str]:
    lines: List[str] = []
    if title or mode:
        lines += [f"{title} ({mode} mode)".strip(), ""]
    lines.append("Consistency ratios")
    for name, cr in result.consistency_ratios.items():
        lines.append(f"  {name:<10}{'n/a (replay)' if cr is None else fmt(cr)}")
    lines.append("")
    lines.append("Normalized criteria weights")
    lines += ["  " + s for s in _table(list(result.criteria), [[_tuple(w) for w in result.weights]])]
    lines.append("")
    lines.append("Normalized priorities per criterion")
    rows = [[c] + [_tuple(w) for w in row] for c, row in zip(result.criteria, result.priorities)]
    lines += ["  " + s for s in _table([""] + list(result.alternatives), rows)]
    lines.append("")
    lines.append("Final preferences")
    lines += ["  " + s for s in _table(list(result.alternatives), [[_tuple(p) for p in result.preferences]])]
    lines.append("")
    lines.append("Rank indices")
    rows = [[a, fmt(b.C), fmt(b.H), fmt(b.f), fmt(b.R)]
            for a, b in zip(result.alternatives, result.breakdowns)]
    lines += ["  " + s for s in _table(["", "C", "H", "f", "R"], rows)]
    lines.append("")
    lines.append(result.order_string())
    return lines


def machine_lines(result: DecisionResult) -> List[str]:
    lines = []
    for name, cr in result.consistency_ratios.items():
        lines.append(f"cr {name} {'nan' if cr is None else _full(cr)}")
    for c, w in zip(result.criteria, result.weights):
        lines.append(f"weight {c} {fmt_sfn(w, True)}")
    for c, row in zip(result.criteria, result.priorities):
        for a, w in zip(result.alternatives, row):
            lines.append(f"priority {c}/{a} {fmt_sfn(w, True)}")
    for a, p in zip(result.alternatives, result.preferences):
        lines.append(f"preference {a} {fmt_sfn(p, True)}")
    for a, b in zip(result.alternatives, result.breakdowns):
        lines.append(f"rank {a} {_full(b.C)} {_full(b.H)} {_full(b.f)} {_full(b.R)}")
    lines.append(result.order_string())
    return lines


def cmd_solve(path: str, mode: Optional[str] = None, cr_threshold: Optional[float] = None,
              cr_policy: Optional[str] = None, report: str = "full", machine: bool = False,
              scale_path: Optional[str] = None, out: Optional[TextIO] = None,
              err: Optional[TextIO] = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    text = Path(path).read_text()
    scale = parse_scale_file(Path(scale_path).read_text()) if scale_path else DEFAULT_SCALE
    problem = parse_problem_file(text, mode=mode)
    problem = with_overrides(problem, cr_threshold=cr_threshold, cr_policy=cr_policy)
    result = solve(problem, scale)
    for w in result.warnings:
        print(f"warning: {w}", file=err)
    if machine:
        lines = machine_lines(result)
    elif report == "summary":
        lines = [result.order_string()]
    else:
        lines = report_lines(result, problem.name, problem.mode)
    print("\n".join(lines), file=out)
    return EXIT_OK


# --------------------------------------------------------------------------
# Entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shadowed-ahp",
                                 description="Shadowed AHP over multi-granular comparisons.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert one entry to a shadowed fuzzy number")
    p.add_argument("entry")
    p.add_argument("--machine", action="store_true", help="full-precision output")

    p = sub.add_parser("solve", help="solve a problem file")
    p.add_argument("file")
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--cr-threshold", type=float)
    p.add_argument("--cr-policy", choices=("error", "warn"))
    p.add_argument("--report", choices=("full", "summary"), default="full")
    p.add_argument("--machine", action="store_true", help="emit 'kind label values' lines")
    p.add_argument("--scale", help="scale override file")

    p = sub.add_parser("rank", help="rank shadowed fuzzy numbers")
    p.add_argument("entries", nargs="*", metavar="sfn")
    p.add_argument("--machine", action="store_true")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if args.command == "convert":
            return cmd_convert(args.entry, args.machine)
        if args.command == "rank":
            return cmd_rank(args.entries, args.machine)
        return cmd_solve(args.file, args.mode, args.cr_threshold, args.cr_policy,
                         args.report, args.machine, args.scale)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NumericalError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
