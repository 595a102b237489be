"""Max-norm error measurement and convergence studies over step ladders."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError, UnsupportedProblemError
from .kernels import theoretical_kernel_order
from .problems import (
    RegularizedProblem,
    ThreeTermProblem,
    TwoTermProblem,
    exact_regularized,
    exact_two_term,
    regularize_three_term,
    regularize_two_term,
)
from .solvers import GridSolution, SolverConfig, solve_ns1, solve_ns2, solve_ns3

SOLVERS = ("ns1", "ns2", "ns3")


@dataclass(frozen=True)
class ReportRow:
    h: float
    max_error: float
    observed_order: Optional[float]  # None on the coarsest level


@dataclass(frozen=True)
class ConvergenceReport:
    """One convergence study: rows sorted by decreasing h."""

    solver: str
    scheme: str
    alpha: float
    m: Optional[int]  # None for direct (unregularized) runs
    problem: str
    theoretical_order: float
    rows: tuple


def max_error(numeric: GridSolution, exact: Callable[[float], float]) -> float:
    """Maximum absolute deviation from ``exact`` over the whole grid,
    including the initial point."""
    ts = np.arange(len(numeric.values)) * numeric.h
    ref = np.array([exact(t) for t in ts])
    return float(np.max(np.abs(numeric.values - ref)))


def observed_order(err_coarse: float, err_fine: float) -> float:
    """log2 of the error ratio between a step and its halved refinement."""
    if err_coarse <= 0.0 or err_fine <= 0.0:
        raise DomainError("observed order is undefined when an error vanishes")
    return math.log2(err_coarse / err_fine)


def theoretical_order(solver: str, scheme: str, alpha: float, regularized: bool = True) -> float:
    """Expected convergence exponent of a solver/scheme pair."""
    if solver == "ns1":
        return theoretical_kernel_order(scheme, alpha) if regularized else alpha
    if solver == "ns2":
        return min(
            theoretical_kernel_order(scheme, alpha),
            theoretical_kernel_order(scheme, 2.0 * alpha),
        )
    if solver == "ns3":
        return min(2.0, theoretical_kernel_order(scheme, 0.5))
    raise DomainError(f"unknown solver {solver!r}, expected one of {SOLVERS}")


def _validated_ladder(h_ladder: Sequence[float]) -> list:
    hs = [float(h) for h in h_ladder]
    if not hs:
        raise ValueError("step ladder must not be empty")
    if any(h <= 0.0 for h in hs):
        raise ValueError("step sizes must be positive")
    hs.sort(reverse=True)
    for coarse, fine in zip(hs, hs[1:]):
        if abs(coarse / fine - 2.0) > 1e-9:
            raise ValueError(
                f"step ladder must halve between levels, got {coarse:g} -> {fine:g}"
            )
    return hs


def _steps(T: float, h: float) -> int:
    n = round(T / h)
    if n < 1 or abs(n * h - T) > 1e-9 * T:
        raise ValueError(f"step {h:g} does not divide the horizon {T:g}")
    return n


def run_study(
    problem: Union[TwoTermProblem, ThreeTermProblem],
    solver: str,
    scheme: str,
    m: Optional[int],
    h_ladder: Sequence[float],
    T: float = 1.0,
) -> ConvergenceReport:
    """Solve at every ladder level and report errors and observed orders.

    ``m`` selects the Taylor subtraction degree; ``m=None`` runs the
    problem directly (ns1 only).  The ladder must halve level to level; an
    extra coarse level is the conventional way to give the first reported
    row an order entry.  Errors are measured against the closed-form
    solution (the remainder's for regularized runs), so three-term studies
    are limited to the coefficient set with a shipped closed form.
    """
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver {solver!r}, expected one of {SOLVERS}")
    hs = _validated_ladder(h_ladder)

    if m is None:
        if solver != "ns1":
            raise UnsupportedProblemError(f"{solver} requires a regularized problem (give m)")
        if not isinstance(problem, TwoTermProblem):
            raise UnsupportedProblemError("direct studies are available for two-term problems only")
        target = problem
        exact = lambda t: exact_two_term(problem, t)  # noqa: E731
        desc = f"two-term direct alpha={problem.alpha:g} B={problem.B:g}"
        regularized = False
    else:
        if isinstance(problem, TwoTermProblem):
            target = regularize_two_term(problem, m)
            desc = f"two-term regularized alpha={problem.alpha:g} B={problem.B:g} m={m}"
        elif isinstance(problem, ThreeTermProblem):
            target = regularize_three_term(problem, m)
            desc = (
                f"three-term regularized alpha={problem.alpha:g} "
                f"A={problem.A:g} C={problem.C:g} m={m}"
            )
        else:
            raise UnsupportedProblemError(f"cannot study {type(problem).__name__}")
        reg: RegularizedProblem = target
        exact = lambda t: exact_regularized(reg, t)  # noqa: E731
        regularized = True

    step = {"ns1": solve_ns1, "ns2": solve_ns2, "ns3": solve_ns3}[solver]
    rows = []
    prev_err: Optional[float] = None
    for h in hs:
        cfg = SolverConfig(T, _steps(T, h), scheme)
        err = max_error(step(target, cfg), exact)
        order = None
        if prev_err is not None and prev_err > 0.0 and err > 0.0:
            order = observed_order(prev_err, err)
        rows.append(ReportRow(h, err, order))
        prev_err = err

    return ConvergenceReport(
        solver=solver,
        scheme=scheme,
        alpha=problem.alpha,
        m=m,
        problem=desc,
        theoretical_order=theoretical_order(solver, scheme, problem.alpha, regularized),
        rows=tuple(rows),
    )
