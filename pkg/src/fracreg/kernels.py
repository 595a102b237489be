"""Discrete convolution kernels for the Caputo derivative on uniform grids.

Three kernels are generated, all of the form

    D^a y(t_n)  ~=  normalization * h^(-a) * sum_{k=0}^{n} w_k y_{n-k}.

* ``l1``  -- the classical piecewise-linear weights, order 2 - a;
* ``a2``  -- the ``l1`` weights with the three leading entries shifted by
  zeta(a - 1), order 2 for 0 < a < 1 and 3 - a for 1 < a < 2;
* ``a4``  -- inverse-power weights k^-(1+a) with zeta-corrected head,
  order 3 - a, valid only when the sampled function and its first two
  derivatives vanish at t = 0.

Weight arrays are immutable after construction and are meant to be built
once per (scheme, order, grid size) and reused for every time step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .specfun import gamma, zeta

SCHEMES = ("l1", "a2", "a4")


@dataclass(frozen=True)
class KernelCoefficients:
    """One generated kernel: raw weights plus how to apply them.

    ``weights[k]`` multiplies the sample ``y_{n-k}``; the physical value is
    ``normalization * h**-alpha * sum_k weights[k] * y_{n-k}``.  ``order``
    is the theoretical accuracy exponent in the step size.
    """

    scheme: str
    alpha: float
    n: int
    weights: np.ndarray
    normalization: float
    order: float
    requires_zero_initial_data: bool = False


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 2.0 or alpha == 1.0:
        raise DomainError(
            f"kernel order must lie in (0,1) or (1,2), got alpha={alpha:g}"
        )


def _first_differences(alpha: float, n: int) -> np.ndarray:
    """b[k] = (k+1)^(1-a) - k^(1-a) for k = 0..n-1, with 0^(1-a) taken as 0.

    The second differences of k^(1-a) are the interior ``l1`` weights;
    building them from this array makes the weight sum telescope exactly in
    floating point (the direct three-term formula loses that to rounding
    for large n).
    """
    p = np.empty(n + 1)
    p[0] = 0.0
    p[1:] = np.arange(1, n + 1, dtype=float) ** (1.0 - alpha)
    return np.diff(p)


def l1_coeffs(alpha: float, n: int) -> KernelCoefficients:
    """Piecewise-linear kernel weights for steps 0..n (order 2 - alpha)."""
    _check_alpha(alpha)
    if n < 1:
        raise DomainError(f"l1 kernel needs n >= 1, got {n}")
    b = _first_differences(alpha, n)
    w = np.empty(n + 1)
    w[0] = 1.0
    w[1:n] = b[1:] - b[:-1]
    w[n] = -b[n - 1]
    return KernelCoefficients("l1", alpha, n, w, 1.0 / gamma(2.0 - alpha), 2.0 - alpha)


def a2_coeffs(alpha: float, n: int) -> KernelCoefficients:
    """Zeta-corrected second-order kernel.

    Starts from the ``l1`` weights and shifts the k = 0, 1, 2 entries by
    -zeta(alpha-1), +2 zeta(alpha-1), -zeta(alpha-1); the corrections cancel
    in the weight sum.  n >= 3 keeps the corrected head clear of the closing
    weight at k = n, which follows a different formula.
    """
    _check_alpha(alpha)
    if n < 3:
        raise DomainError(f"a2 kernel needs n >= 3, got {n}")
    base = l1_coeffs(alpha, n)
    zc = zeta(alpha - 1.0)
    w = base.weights.copy()
    w[0] -= zc
    w[1] += 2.0 * zc
    w[2] -= zc
    order = 2.0 if alpha < 1.0 else 3.0 - alpha
    return KernelCoefficients("a2", alpha, n, w, base.normalization, order)


def a4_coeffs(alpha: float, n: int) -> KernelCoefficients:
    """Order-(3 - alpha) kernel for functions with vanishing initial data.

    Weights are k^-(1+alpha) for k >= 3 with a zeta-corrected head, applied
    with normalization 1/gamma(-alpha).  alpha = 1 is a pole of that
    normalization (this is what rules the kernel out at half-order pairs
    whose doubled order lands on 1).  Accuracy requires
    y(0) = y'(0) = y''(0) = 0.
    """
    if alpha == 1.0:
        raise PoleError("a4 kernel normalization 1/gamma(-alpha) has a pole at alpha = 1")
    _check_alpha(alpha)
    if n < 3:
        raise DomainError(f"a4 kernel needs n >= 3, got {n}")
    za = zeta(alpha)
    zam1 = zeta(alpha - 1.0)
    z1pa = zeta(1.0 + alpha)
    w = np.empty(n + 1)
    w[0] = -z1pa + 1.5 * za - 0.5 * zam1
    w[1] = 1.0 - 2.0 * za + zam1
    w[2] = 2.0 ** (-(1.0 + alpha)) + 0.5 * za - 0.5 * zam1
    w[3:] = np.arange(3, n + 1, dtype=float) ** (-(1.0 + alpha))
    return KernelCoefficients(
        "a4", alpha, n, w, 1.0 / gamma(-alpha), 3.0 - alpha,
        requires_zero_initial_data=True,
    )


def kernel_coeffs(scheme: str, alpha: float, n: int) -> KernelCoefficients:
    """Dispatch to the named kernel builder."""
    if scheme == "l1":
        return l1_coeffs(alpha, n)
    if scheme == "a2":
        return a2_coeffs(alpha, n)
    if scheme == "a4":
        return a4_coeffs(alpha, n)
    raise DomainError(f"unknown scheme {scheme!r}, expected one of {SCHEMES}")


def closing_weights(scheme: str, alpha: float, n: int) -> np.ndarray:
    """Weight multiplying the oldest sample y_0 at each step.

    The ``l1``/``a2`` weight arrays end in a closing weight
    (k-1)^(1-a) - k^(1-a) that depends on the step index, so a time stepper
    sharing one size-n array needs the per-step values separately; entry k
    of the returned array is that weight for a step of length k (entry 0 is
    unused).  For ``a4`` the closing weight coincides with the interior
    formula k^-(1+a).
    """
    _check_alpha(alpha)
    if n < 1:
        raise DomainError(f"closing weights need n >= 1, got {n}")
    c = np.empty(n + 1)
    c[0] = 0.0
    if scheme == "a4":
        c[1:] = np.arange(1, n + 1, dtype=float) ** (-(1.0 + alpha))
    elif scheme in ("l1", "a2"):
        c[1:] = -_first_differences(alpha, n)
    else:
        raise DomainError(f"unknown scheme {scheme!r}, expected one of {SCHEMES}")
    return c


def theoretical_kernel_order(scheme: str, alpha: float) -> float:
    """Accuracy exponent beta(alpha) of a scheme without building weights."""
    _check_alpha(alpha)
    if scheme == "l1":
        return 2.0 - alpha
    if scheme == "a2":
        return 2.0 if alpha < 1.0 else 3.0 - alpha
    if scheme == "a4":
        return 3.0 - alpha
    raise DomainError(f"unknown scheme {scheme!r}, expected one of {SCHEMES}")


def first_derivative_stencil(y_n: float, y_nm1: float, y_nm2: float, h: float) -> float:
    """Backward three-point first derivative, second order accurate."""
    if h <= 0.0:
        raise DomainError(f"step h must be positive, got {h:g}")
    return (1.5 * y_n - 2.0 * y_nm1 + 0.5 * y_nm2) / h


def apply_kernel(kc: KernelCoefficients, samples, h: float) -> float:
    """Apply a kernel to grid samples y_0..y_n with spacing h.

    Returns normalization * h^-alpha * sum_k weights[k] * y_{n-k}.
    """
    y = np.asarray(samples, dtype=float)
    if y.shape != (kc.n + 1,):
        raise ValueError(
            f"kernel of size {kc.n} needs {kc.n + 1} samples, got {y.shape}"
        )
    if h <= 0.0:
        raise DomainError(f"step h must be positive, got {h:g}")
    return kc.normalization * h ** (-kc.alpha) * float(np.dot(kc.weights, y[::-1]))
