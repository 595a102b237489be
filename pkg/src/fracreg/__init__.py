"""Solvers for linear constant-coefficient fractional ODEs on [0, T].

Fractional relaxation problems have solutions whose derivatives blow up at
the initial point, which degrades every uniform-grid scheme.  This package
removes the singularity by subtracting a fractional Taylor polynomial,
solves the smooth remainder with one of three Caputo-derivative kernels,
and adds the polynomial back.  It ships the special functions the exact
solutions need, convergence-study tooling, and a CLI that reproduces the
bundled reference tables.
"""

from .analysis import (
    ConvergenceReport,
    ReportRow,
    max_error,
    observed_order,
    run_study,
    theoretical_order,
)
from .errors import (
    DomainError,
    FracregError,
    IncompatibleSchemeError,
    NonConvergenceError,
    PoleError,
    UnsupportedProblemError,
)
from .kernels import (
    KernelCoefficients,
    a2_coeffs,
    a4_coeffs,
    apply_kernel,
    closing_weights,
    first_derivative_stencil,
    kernel_coeffs,
    l1_coeffs,
    theoretical_kernel_order,
)
from .problems import (
    MillerRossSequence,
    RegularizedProblem,
    TaylorPolynomial,
    ThreeTermProblem,
    TwoTermProblem,
    exact_regularized,
    exact_three_term,
    exact_two_term,
    miller_ross_three_term,
    miller_ross_two_term,
    min_m,
    regularize_three_term,
    regularize_two_term,
    taylor_eval,
)
from .solvers import (
    GridSolution,
    SolverConfig,
    recover_solution,
    solve_ns1,
    solve_ns2,
    solve_ns3,
)
from .specfun import gamma, mittag_leffler, zeta

__version__ = "0.1.0"

__all__ = [
    "ConvergenceReport",
    "DomainError",
    "FracregError",
    "GridSolution",
    "IncompatibleSchemeError",
    "KernelCoefficients",
    "MillerRossSequence",
    "NonConvergenceError",
    "PoleError",
    "RegularizedProblem",
    "ReportRow",
    "SolverConfig",
    "TaylorPolynomial",
    "ThreeTermProblem",
    "TwoTermProblem",
    "UnsupportedProblemError",
    "a2_coeffs",
    "a4_coeffs",
    "apply_kernel",
    "closing_weights",
    "exact_regularized",
    "exact_three_term",
    "exact_two_term",
    "first_derivative_stencil",
    "gamma",
    "kernel_coeffs",
    "l1_coeffs",
    "max_error",
    "miller_ross_three_term",
    "miller_ross_two_term",
    "min_m",
    "mittag_leffler",
    "observed_order",
    "recover_solution",
    "regularize_three_term",
    "regularize_two_term",
    "run_study",
    "solve_ns1",
    "solve_ns2",
    "solve_ns3",
    "taylor_eval",
    "theoretical_kernel_order",
    "theoretical_order",
    "zeta",
    "__version__",
]
