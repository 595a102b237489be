"""Command-line interface.

Three subcommands:

* ``table ID``  -- rerun one of the bundled reference studies (1..7) and
  print it in the same layout: one h column, then error/order pairs.
* ``study``     -- convergence study for arbitrary parameters over a
  halving ladder of --h values.
* ``solve``     -- dump a single grid solution as (t, u, recovered y,
  exact y, error) rows.

Exit status: 0 on success, 1 on validation problems, 2 on mathematical
domain failures (poles, incompatible kernels, missing closed forms).
Output is byte-deterministic; errors print with four significant digits in
0.XXXXe+EE form and orders with four decimals.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import List, Optional

from .analysis import ConvergenceReport, run_study
from .errors import FracregError
from .problems import (
    ThreeTermProblem,
    TwoTermProblem,
    UnsupportedProblemError,
    exact_three_term,
    exact_two_term,
    regularize_three_term,
    regularize_two_term,
)
from .solvers import SolverConfig, recover_solution, solve_ns1, solve_ns2, solve_ns3
from .tables import H_LADDER, TABLES, THREE_TERM_COEFFS, TIME_HORIZON, column_report


class ValidationError(Exception):
    """Bad command line; maps to exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from sys.exit(2)
        raise ValidationError(message)


def _fmt_err(x: float) -> str:
    """Four significant digits as 0.XXXXe+EE (matching the table layout)."""
    if x == 0.0:
        return "0.0000e+00"
    e = math.floor(math.log10(abs(x))) + 1
    m = x / 10.0 ** e
    m = round(m, 4)
    if abs(m) >= 1.0:
        m /= 10.0
        e += 1
    return f"{m:.4f}e{e:+03d}"


def _fmt_order(o: Optional[float]) -> str:
    return "" if o is None else f"{o:.4f}"


def _fmt_h(h: float) -> str:
    return f"{h:.10g}"


def _fmt_val(x: float) -> str:
    return f"{x:.12g}"


def _render_grid_csv(header: List[str], rows: List[List[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(r) for r in rows)
    return "\n".join(lines) + "\n"


def _render_grid_md(header: List[str], rows: List[List[str]], title: str = "") -> str:
    lines = []
    if title:
        lines.append(f"**{title}**")
        lines.append("")
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "|".join(" --- " for _ in header) + "|")
    lines.extend("| " + " | ".join(r) + " |" for r in rows)
    return "\n".join(lines) + "\n"


def _report_grid(reports: List[ConvergenceReport], labels: List[str], printed_h):
    header = ["h"]
    for label in labels:
        header += [f"error {label}", f"order {label}"]
    rows = []
    for h in printed_h:
        row = [_fmt_h(h)]
        for rep in reports:
            match = [r for r in rep.rows if r.h == h]
            if not match:
                raise ValidationError(f"no study row at h={h:g}")
            row += [_fmt_err(match[0].max_error), _fmt_order(match[0].observed_order)]
        rows.append(row)
    return header, rows


def _cmd_table(args) -> str:
    if args.table_id not in TABLES:
        raise ValidationError(f"table id must be 1..7, got {args.table_id}")
    spec = TABLES[args.table_id]
    reports = [column_report(col) for col in spec.columns]
    header, rows = _report_grid(reports, [c.label for c in spec.columns], H_LADDER[1:])
    if args.format == "md":
        return _render_grid_md(header, rows, title=f"Table {spec.table_id}: {spec.title}")
    return _render_grid_csv(header, rows)


def _build_problem(args):
    """Problem object from flags; fills solver-appropriate defaults."""
    if args.solver == "ns1":
        if args.A is not None or args.C is not None or args.ya0 is not None:
            raise ValidationError("--A/--C/--ya0 apply to the three-term solvers (ns2, ns3)")
        B = 1.0 if args.B is None else args.B
        y0 = 1.0 if args.y0 is None else args.y0
        return TwoTermProblem(args.alpha, B, y0)
    if args.B is not None:
        raise ValidationError("--B applies to the two-term solver (ns1)")
    coeffs = dict(THREE_TERM_COEFFS)
    if args.A is not None:
        coeffs["A"] = args.A
    if args.C is not None:
        coeffs["C"] = args.C
    if args.y0 is not None:
        coeffs["y0"] = args.y0
    if args.ya0 is not None:
        coeffs["ya0"] = args.ya0
    return ThreeTermProblem(args.alpha, **coeffs)


def _validated_alpha(args) -> None:
    if args.alpha is None:
        if args.solver == "ns3":
            args.alpha = 0.5
        else:
            raise ValidationError("--alpha is required")
    if not 0.0 < args.alpha < 1.0:
        raise ValidationError(f"--alpha must lie in (0,1), got {args.alpha:g}")


def _cmd_study(args) -> str:
    _validated_alpha(args)
    problem = _build_problem(args)
    if args.m is not None and args.m < 1:
        raise ValidationError("--m must be a positive integer")
    if args.solver in ("ns2", "ns3") and args.m is None:
        raise ValidationError(f"{args.solver} needs a subtraction degree: pass --m")
    try:
        report = run_study(problem, args.solver, args.scheme, args.m, args.h, args.T)
    except ValueError as exc:
        if isinstance(exc, FracregError):
            raise
        raise ValidationError(str(exc)) from exc
    header = ["h", "error", "order"]
    rows = [
        [_fmt_h(r.h), _fmt_err(r.max_error), _fmt_order(r.observed_order)]
        for r in report.rows
    ]
    if args.format == "md":
        title = (
            f"study {report.problem} scheme={report.scheme} "
            f"(theoretical order {report.theoretical_order:g})"
        )
        return _render_grid_md(header, rows, title=title)
    return _render_grid_csv(header, rows)


def _cmd_solve(args) -> str:
    _validated_alpha(args)
    problem = _build_problem(args)
    if len(args.h) != 1:
        raise ValidationError("solve takes exactly one --h")
    h = args.h[0]
    n = round(args.T / h)
    if n < 1 or abs(n * h - args.T) > 1e-9 * args.T:
        raise ValidationError(f"step {h:g} does not divide the horizon {args.T:g}")
    cfg = SolverConfig(args.T, n, args.scheme)

    if args.m is None:
        if args.solver != "ns1":
            raise ValidationError(f"{args.solver} needs a subtraction degree: pass --m")
        target = problem
        reg = None
    else:
        if args.m < 1:
            raise ValidationError("--m must be a positive integer")
        if isinstance(problem, TwoTermProblem):
            reg = regularize_two_term(problem, args.m)
        else:
            reg = regularize_three_term(problem, args.m)
        target = reg

    step = {"ns1": solve_ns1, "ns2": solve_ns2, "ns3": solve_ns3}[args.solver]
    sol = step(target, cfg)
    recovered = recover_solution(sol, reg) if reg is not None else sol

    if isinstance(problem, TwoTermProblem):
        exact = lambda t: exact_two_term(problem, t)  # noqa: E731
    else:
        try:
            exact_three_term(problem, 0.0)
            exact = lambda t: exact_three_term(problem, t)  # noqa: E731
        except UnsupportedProblemError:
            exact = None

    header = ["t", "u", "recovered", "exact", "error"]
    rows = []
    for i in range(n + 1):
        t = i * cfg.h
        row = [_fmt_h(t), _fmt_val(sol.values[i]), _fmt_val(recovered.values[i])]
        if exact is None:
            row += ["", ""]
        else:
            y = exact(t)
            row += [_fmt_val(y), _fmt_err(abs(recovered.values[i] - y))]
        rows.append(row)
    if args.format == "md":
        return _render_grid_md(header, rows, title=f"solve {args.solver}/{args.scheme} N={n}")
    return _render_grid_csv(header, rows)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fracreg", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="rerun a bundled reference study (1..7)")
    p_table.add_argument("table_id", type=int, help="table number, 1..7")
    _add_output_flags(p_table)

    for name, helptext in (
        ("study", "convergence study over a halving --h ladder"),
        ("solve", "dump one grid solution"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--solver", choices=("ns1", "ns2", "ns3"), default="ns1")
        p.add_argument("--scheme", choices=("l1", "a2", "a4"), default="l1")
        p.add_argument("--alpha", type=float, help="derivative order in (0,1)")
        p.add_argument("--B", type=float, help="two-term reaction coefficient")
        p.add_argument("--A", type=float, help="three-term damping coefficient")
        p.add_argument("--C", type=float, help="three-term stiffness coefficient")
        p.add_argument("--y0", type=float, help="initial value")
        p.add_argument("--ya0", type=float, help="initial fractional derivative (three-term)")
        p.add_argument("--m", type=int, help="Taylor subtraction degree (omit for a direct run)")
        p.add_argument("--T", type=float, default=TIME_HORIZON, help="time horizon")
        p.add_argument(
            "--h", type=float, action="append", required=True,
            help="step size; repeat to build a halving ladder (study)",
        )
        _add_output_flags(p)
    return parser


def _add_output_flags(p) -> None:
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.add_argument("--out", help="output path (default: standard output)")


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        text = {"table": _cmd_table, "study": _cmd_study, "solve": _cmd_solve}[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FracregError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
