"""Time-stepping recurrences for the two- and three-term equations.

All three solvers march a grid solution u_0..u_N on [0, T] with h = T/N,
resolving each step from the discretized equation (so the produced values
satisfy the discrete equation exactly, up to rounding):

* ``solve_ns1`` -- two-term equation with a single kernel of order a:
      u_n = (h^a F_n - sum_{k=1}^{n} L_k u_{n-k}) / (L_0 + B h^a),
  where L are the normalized kernel weights.
* ``solve_ns2`` -- three-term equation with kernels at orders a and 2a.
  Since the remainder starts at zero, the k = n history term vanishes and
      u_n = (h^{2a} F_n - sum_{k=1}^{n-1} (L_k^{2a} + A h^a L_k^{a}) u_{n-k})
            / (L_0^{2a} + A h^a L_0^{a} + C h^{2a}).
* ``solve_ns3`` -- three-term equation at a = 1/2, where the doubled order
  is an honest first derivative, approximated by the backward three-point
  stencil:
      u_n = (2h F_n + 4u_{n-1} - u_{n-2} - 2A h^{1/2} sum_{k=1}^{n} L_k u_{n-k})
            / (3 + 2A L_0 h^{1/2} + 2C h).

Startup: direct (unregularized) runs keep u_0 = y(0); the ``a2`` kernel is
bootstrapped there with two ``l1`` steps because its corrected head
overlaps the closing weight for n < 3.  Regularized runs start from zeros
(three of them for the ``a2``/``a4`` kernels, two for ns2/ns3), which costs
less than the scheme error once the subtraction degree clears the
smoothness threshold.  The ``a4`` kernel refuses direct runs outright; it
is only consistent with vanishing initial data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError, IncompatibleSchemeError, UnsupportedProblemError
from .kernels import SCHEMES, closing_weights, kernel_coeffs, l1_coeffs
from .problems import (
    RegularizedProblem,
    TaylorPolynomial,
    ThreeTermProblem,
    TwoTermProblem,
    taylor_eval,
)

STARTUP_PLAIN = "plain"
STARTUP_L1_BOOTSTRAP = "l1-bootstrap"
STARTUP_ZERO = "zero-start"


@dataclass(frozen=True)
class SolverConfig:
    """Grid description: horizon T, step count N (h = T/N), kernel scheme."""

    T: float
    N: int
    scheme: str = "l1"

    def __post_init__(self) -> None:
        if self.T <= 0.0:
            raise DomainError(f"horizon T must be positive, got {self.T:g}")
        if self.N < 4:
            raise DomainError(f"need at least 4 steps, got N={self.N}")
        if self.scheme not in SCHEMES:
            raise DomainError(f"unknown scheme {self.scheme!r}, expected one of {SCHEMES}")

    @property
    def h(self) -> float:
        return self.T / self.N


@dataclass(frozen=True)
class GridSolution:
    """Solution samples u_0..u_N with the startup rule that produced them."""

    h: float
    values: np.ndarray
    startup_rule: str

    @property
    def N(self) -> int:
        return len(self.values) - 1


def _normalized_arrays(scheme: str, alpha: float, n: int):
    kc = kernel_coeffs(scheme, alpha, n)
    lam = kc.normalization * kc.weights
    closing = kc.normalization * closing_weights(scheme, alpha, n)
    return lam, np.ascontiguousarray(lam[::-1]), closing


def _history(lam_rev: np.ndarray, u: np.ndarray, n: int) -> float:
    """sum_{k=1}^{n-1} lam_k u_{n-k} via a contiguous dot product."""
    if n <= 1:
        return 0.0
    N = len(lam_rev) - 1
    return float(np.dot(lam_rev[N - n + 1 : N], u[1:n]))


def _forcing_of(problem) -> callable:
    if isinstance(problem, RegularizedProblem):
        return problem.residual_forcing
    if problem.forcing is not None:
        return problem.forcing
    return lambda t: 0.0


def solve_ns1(problem: Union[TwoTermProblem, RegularizedProblem], cfg: SolverConfig) -> GridSolution:
    """March the two-term recurrence with the configured kernel.

    Accepts either a direct TwoTermProblem (u_0 = y0) or a regularized one
    (u_0 = 0).  Direct runs with the ``a4`` kernel are rejected because its
    weights do not annihilate constants.
    """
    if isinstance(problem, RegularizedProblem):
        if not isinstance(problem.base, TwoTermProblem):
            raise UnsupportedProblemError("solve_ns1 handles two-term problems only")
        alpha, B = problem.base.alpha, problem.base.B
        u0 = 0.0
        regularized = True
    elif isinstance(problem, TwoTermProblem):
        alpha, B = problem.alpha, problem.B
        u0 = problem.y0
        regularized = False
    else:
        raise UnsupportedProblemError(f"solve_ns1 cannot handle {type(problem).__name__}")

    if cfg.scheme == "a4" and not regularized:
        raise IncompatibleSchemeError(
            "the a4 kernel requires vanishing initial data; regularize the problem first"
        )

    N, h = cfg.N, cfg.h
    F = _forcing_of(problem)
    ha = h ** alpha
    lam, lam_rev, closing = _normalized_arrays(cfg.scheme, alpha, N)
    denom = lam[0] + B * ha
    if denom == 0.0:
        raise DomainError("degenerate step equation: kernel head weight + B h^alpha = 0")

    u = np.zeros(N + 1)
    u[0] = u0
    if regularized and cfg.scheme in ("a2", "a4"):
        start = 3  # u_1 = u_2 = 0; admissible since the remainder is o(h^2) there
        rule = STARTUP_ZERO
    else:
        start = 1
        rule = STARTUP_PLAIN

    if not regularized and cfg.scheme == "a2":
        lam1, lam1_rev, closing1 = _normalized_arrays("l1", alpha, N)
        denom1 = lam1[0] + B * ha
        if denom1 == 0.0:
            raise DomainError("degenerate step equation in l1 bootstrap")
        for n in (1, 2):
            hist = _history(lam1_rev, u, n) + closing1[n] * u[0]
            u[n] = (ha * F(n * h) - hist) / denom1
        start = 3
        rule = STARTUP_L1_BOOTSTRAP

    for n in range(start, N + 1):
        hist = _history(lam_rev, u, n) + closing[n] * u[0]
        u[n] = (ha * F(n * h) - hist) / denom
    return GridSolution(h, u, rule)


def solve_ns2(r: RegularizedProblem, cfg: SolverConfig, history_sign: int = 1) -> GridSolution:
    """March the three-term recurrence with kernels at orders a and 2a.

    ``history_sign`` combines the two kernels' history weights as
    L^{2a} + sign * A h^a L^{a}; +1 is what eliminating u_n from the
    discretized equation gives (and what reproduces the reference tables),
    -1 is kept as a diagnostic variant only.
    """
    if not isinstance(r, RegularizedProblem) or not isinstance(r.base, ThreeTermProblem):
        raise UnsupportedProblemError("solve_ns2 needs a regularized three-term problem")
    if history_sign not in (1, -1):
        raise DomainError(f"history_sign must be +1 or -1, got {history_sign}")
    base = r.base
    alpha, A, C = base.alpha, base.A, base.C

    N, h = cfg.N, cfg.h
    # a4 at 2*alpha = 1 raises PoleError here; l1/a2 degenerate there too
    # and surface a DomainError from the kernel builder.
    lam_a, _, _ = _normalized_arrays(cfg.scheme, alpha, N)
    lam_2a, _, _ = _normalized_arrays(cfg.scheme, 2.0 * alpha, N)
    ha = h ** alpha
    h2a = h ** (2.0 * alpha)
    comb = lam_2a + history_sign * (A * ha) * lam_a
    comb_rev = np.ascontiguousarray(comb[::-1])
    denom = lam_2a[0] + A * ha * lam_a[0] + C * h2a
    if denom == 0.0:
        raise DomainError("degenerate step equation in solve_ns2")

    F = r.residual_forcing
    u = np.zeros(N + 1)  # u_0 = u_1 = 0: the remainder and its start are zero
    for n in range(2, N + 1):
        hist = _history(comb_rev, u, n)
        u[n] = (h2a * F(n * h) - hist) / denom
    return GridSolution(h, u, STARTUP_ZERO)


def solve_ns3(r: RegularizedProblem, cfg: SolverConfig) -> GridSolution:
    """March the half-order three-term recurrence (alpha must equal 0.5).

    The doubled derivative is the plain first derivative, discretized by
    the backward three-point stencil; the half-order term uses the
    configured kernel.
    """
    if not isinstance(r, RegularizedProblem) or not isinstance(r.base, ThreeTermProblem):
        raise UnsupportedProblemError("solve_ns3 needs a regularized three-term problem")
    base = r.base
    if base.alpha != 0.5:
        raise DomainError(f"solve_ns3 is specific to alpha = 0.5, got {base.alpha:g}")
    A, C = base.A, base.C

    N, h = cfg.N, cfg.h
    lam, lam_rev, closing = _normalized_arrays(cfg.scheme, 0.5, N)
    hs = math.sqrt(h)
    denom = 3.0 + 2.0 * A * lam[0] * hs + 2.0 * C * h
    if denom == 0.0:
        raise DomainError("degenerate step equation in solve_ns3")

    F = r.residual_forcing
    u = np.zeros(N + 1)  # u_0 = u_1 = 0
    for n in range(2, N + 1):
        hist = _history(lam_rev, u, n) + closing[n] * u[0]
        u[n] = (2.0 * h * F(n * h) + 4.0 * u[n - 1] - u[n - 2] - 2.0 * A * hs * hist) / denom
    return GridSolution(h, u, STARTUP_ZERO)


def recover_solution(g: GridSolution, r: RegularizedProblem) -> GridSolution:
    """Add the subtracted Taylor polynomial back: v_n = u_n + T_m(t_n)."""
    poly: TaylorPolynomial = r.subtracted
    shift = np.array([taylor_eval(poly, n * g.h) for n in range(len(g.values))])
    return GridSolution(g.h, g.values + shift, g.startup_rule)
