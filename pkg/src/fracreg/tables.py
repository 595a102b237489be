"""Built-in parameter manifest for the bundled reference studies.

Seven studies (tables 1..7) pin down solver, scheme, equation coefficients
and subtraction degree per column, plus the shared step ladder.  Keeping
them in one versioned structure makes accidental drift visible to tests.
Table 1 runs the singular problems directly; tables 2..4 run the
regularized two-term problem with the l1/a2/a4 kernels; tables 5..6 the
regularized three-term problem at orders (a, 2a); table 7 the half-order
variant at alpha = 0.5 with all three kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analysis import ConvergenceReport, run_study
from .problems import ThreeTermProblem, TwoTermProblem

MANIFEST_VERSION = 1

TIME_HORIZON = 1.0

# The coarsest level is solved but not printed; it feeds the order entry of
# the first printed row.
H_LADDER = (0.0125, 0.00625, 0.003125, 0.0015625, 0.00078125)
PRINTED_LEVELS = H_LADDER[1:]

THREE_TERM_COEFFS = dict(A=3.0, C=2.0, y0=3.0, ya0=-4.0)

_SCHEME_CODE = {"l1": 1, "a2": 2, "a4": 4}


@dataclass(frozen=True)
class TableColumn:
    solver: str
    scheme: str
    alpha: float
    m: Optional[int]  # None -> direct (unregularized) run
    B: Optional[float] = None  # set on two-term columns

    @property
    def label(self) -> str:
        ns = {"ns1": "NS1", "ns2": "NS2", "ns3": "NS3"}[self.solver]
        parts = [f"{ns}({_SCHEME_CODE[self.scheme]})", f"a={self.alpha:g}"]
        if self.B is not None:
            parts.append(f"B={self.B:g}")
        if self.m is not None:
            parts.append(f"m={self.m}")
        return " ".join(parts)


@dataclass(frozen=True)
class TableSpec:
    table_id: int
    title: str
    columns: tuple


TABLES = {
    1: TableSpec(
        1,
        "Direct solves of the singular two-term problem (order alpha)",
        (
            TableColumn("ns1", "l1", 0.3, None, B=1.0),
            TableColumn("ns1", "l1", 0.5, None, B=2.0),
            TableColumn("ns1", "a2", 0.7, None, B=3.0),
        ),
    ),
    2: TableSpec(
        2,
        "Regularized two-term solves, l1 kernel (order 2-alpha)",
        (
            TableColumn("ns1", "l1", 0.3, 7, B=1.0),
            TableColumn("ns1", "l1", 0.5, 4, B=2.0),
            TableColumn("ns1", "l1", 0.7, 3, B=3.0),
        ),
    ),
    3: TableSpec(
        3,
        "Regularized two-term solves, a2 kernel (second order)",
        (
            TableColumn("ns1", "a2", 0.3, 8, B=1.0),
            TableColumn("ns1", "a2", 0.5, 5, B=2.0),
            TableColumn("ns1", "a2", 0.7, 2, B=3.0),
        ),
    ),
    4: TableSpec(
        4,
        "Regularized two-term solves, a4 kernel (order 3-alpha)",
        (
            TableColumn("ns1", "a4", 0.3, 8, B=1.0),
            TableColumn("ns1", "a4", 0.5, 6, B=2.0),
            TableColumn("ns1", "a4", 0.7, 5, B=3.0),
        ),
    ),
    5: TableSpec(
        5,
        "Regularized three-term solves, a2 kernel (order min{2, 3-2 alpha})",
        (
            TableColumn("ns2", "a2", 0.3, 9),
            TableColumn("ns2", "a2", 0.4, 6),
            TableColumn("ns2", "a2", 0.7, 5),
        ),
    ),
    6: TableSpec(
        6,
        "Regularized three-term solves, a4 kernel (order 3-2 alpha)",
        (
            TableColumn("ns2", "a4", 0.3, 14),
            TableColumn("ns2", "a4", 0.4, 10),
            TableColumn("ns2", "a4", 0.7, 6),
        ),
    ),
    7: TableSpec(
        7,
        "Half-order three-term solves at alpha = 0.5 (orders 1.5 / 2 / 2)",
        (
            TableColumn("ns3", "l1", 0.5, 4),
            TableColumn("ns3", "a2", 0.5, 3),
            TableColumn("ns3", "a4", 0.5, 5),
        ),
    ),
}


def column_problem(col: TableColumn):
    if col.B is not None:
        return TwoTermProblem(col.alpha, col.B, 1.0)
    return ThreeTermProblem(col.alpha, **THREE_TERM_COEFFS)


def column_report(col: TableColumn, h_ladder=H_LADDER, T: float = TIME_HORIZON) -> ConvergenceReport:
    """Run the study a manifest column describes."""
    return run_study(column_problem(col), col.solver, col.scheme, col.m, h_ladder, T)
