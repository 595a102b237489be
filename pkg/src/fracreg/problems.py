"""Problem descriptions, exact solutions, and the smoothing transform.

The two equation families handled by the package are the two-term
relaxation equation

    D^a y + B y = F,        y(0) = y0,          0 < a < 1,

and the three-term equation built from the twice-iterated (sequential)
Caputo derivative

    D^a D^a y + A D^a y + C y = F,   y(0) = y0,  D^a y(0) = ya0.

Their homogeneous solutions have unbounded first derivatives at t = 0,
which caps the accuracy of any uniform-grid scheme.  Subtracting the
fractional Taylor polynomial

    T_m(t) = sum_{k=0}^{m} a_k t^(a k) / gamma(a k + 1),

where a_k are the iterated-derivative values at zero, leaves a remainder
z = y - T_m with vanishing initial data that satisfies the same equation
with a simple power forcing; once m*a exceeds 2 (or 3) the remainder is
twice (three times) continuously differentiable and the schemes recover
their full order.  ``regularize_two_term``/``regularize_three_term``
perform that transform; ``exact_*`` evaluate reference solutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import DomainError, UnsupportedProblemError
from .specfun import gamma, mittag_leffler

Forcing = Callable[[float], float]


def _tpow(t: float, p: float) -> float:
    """t**p for t >= 0 with an explicit branch at the grid origin."""
    if t == 0.0:
        return 1.0 if p == 0.0 else 0.0
    return math.exp(p * math.log(t))


@dataclass(frozen=True)
class TwoTermProblem:
    """D^a y + B y = forcing with y(0) = y0; forcing None means zero."""

    alpha: float
    B: float
    y0: float = 1.0
    forcing: Optional[Forcing] = None

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"two-term problems need alpha in (0,1), got {self.alpha:g}")


@dataclass(frozen=True)
class ThreeTermProblem:
    """D^a D^a y + A D^a y + C y = forcing with y(0) = y0, D^a y(0) = ya0."""

    alpha: float
    A: float
    C: float
    y0: float
    ya0: float
    forcing: Optional[Forcing] = None

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"three-term problems need alpha in (0,1), got {self.alpha:g}")


@dataclass(frozen=True)
class MillerRossSequence:
    """Iterated fractional derivative values a_n = (D^a)^n y (0)."""

    values: tuple


@dataclass(frozen=True)
class TaylorPolynomial:
    """Fractional Taylor polynomial sum a_k t^(alpha k) / gamma(alpha k + 1)."""

    alpha: float
    coefficients: MillerRossSequence


@dataclass(frozen=True)
class RegularizedProblem:
    """A base problem rewritten for the smooth remainder z = y - T_m.

    ``residual_forcing`` is the power forcing the remainder satisfies;
    ``subtracted`` recovers the original solution via y = z + T_m.
    ``smoothness`` records the largest k in {0,..,3} with m*alpha > k, i.e.
    how many continuous derivatives the remainder is guaranteed to have.
    """

    base: Union[TwoTermProblem, ThreeTermProblem]
    m: int
    residual_forcing: Forcing
    subtracted: TaylorPolynomial
    smoothness: int


def miller_ross_two_term(B: float, m: int) -> MillerRossSequence:
    """a_n = (-B)^n for 0 <= n <= m (unit initial value)."""
    if m < 0:
        raise DomainError(f"sequence length m must be >= 0, got {m}")
    vals = [1.0]
    for _ in range(m):
        vals.append(-B * vals[-1])
    return MillerRossSequence(tuple(vals))


def miller_ross_three_term(A: float, C: float, a0: float, a1: float, m: int) -> MillerRossSequence:
    """a_0 = a0, a_1 = a1, then a_{n+1} = -A a_n - C a_{n-1}."""
    if m < 1:
        raise DomainError(f"three-term sequences need m >= 1, got {m}")
    vals = [float(a0), float(a1)]
    for _ in range(m - 1):
        vals.append(-A * vals[-1] - C * vals[-2])
    return MillerRossSequence(tuple(vals))


def taylor_eval(p: TaylorPolynomial, t: float) -> float:
    """Evaluate the polynomial at t >= 0 (the t = 0 term is a_0)."""
    if t < 0.0:
        raise DomainError(f"fractional powers need t >= 0, got {t:g}")
    a = p.coefficients.values
    return math.fsum(
        a[k] * _tpow(t, p.alpha * k) / gamma(p.alpha * k + 1.0)
        for k in range(len(a))
    )


def _smoothness(alpha: float, m: int) -> int:
    return max(k for k in (0, 1, 2, 3) if m * alpha > k)


def regularize_two_term(p: TwoTermProblem, m: int) -> RegularizedProblem:
    """Subtract the degree-m Taylor polynomial from a homogeneous problem.

    The remainder z satisfies D^a z + B z = y0 (-B)^(m+1) t^(a m)/gamma(a m + 1)
    with z(0) = 0.
    """
    if p.forcing is not None:
        raise UnsupportedProblemError("only homogeneous two-term problems can be regularized")
    if m < 1:
        raise DomainError(f"two-term regularization needs m >= 1, got {m}")
    seq = miller_ross_two_term(p.B, m)
    scaled = MillerRossSequence(tuple(p.y0 * v for v in seq.values))
    c = p.y0 * (-p.B) ** (m + 1) / gamma(p.alpha * m + 1.0)
    power = p.alpha * m

    def residual(t: float) -> float:
        return c * _tpow(t, power)

    return RegularizedProblem(
        base=p,
        m=m,
        residual_forcing=residual,
        subtracted=TaylorPolynomial(p.alpha, scaled),
        smoothness=_smoothness(p.alpha, m),
    )


def regularize_three_term(p: ThreeTermProblem, m: int) -> RegularizedProblem:
    """Subtract the degree-m Taylor polynomial from a homogeneous problem.

    The remainder z has z(0) = D^a z(0) = 0 and satisfies the same
    three-term equation with forcing

        F(t) = -(C a_{m-1} + A a_m) t^((m-1)a)/gamma((m-1)a + 1)
               - C a_m t^(m a)/gamma(m a + 1).
    """
    if p.forcing is not None:
        raise UnsupportedProblemError("only homogeneous three-term problems can be regularized")
    if m < 2:
        raise DomainError(f"three-term regularization needs m >= 2, got {m}")
    seq = miller_ross_three_term(p.A, p.C, p.y0, p.ya0, m)
    am1 = seq.values[m - 1]
    am = seq.values[m]
    c1 = -(p.C * am1 + p.A * am) / gamma((m - 1) * p.alpha + 1.0)
    c2 = -p.C * am / gamma(m * p.alpha + 1.0)
    p1 = (m - 1) * p.alpha
    p2 = m * p.alpha

    def residual(t: float) -> float:
        return c1 * _tpow(t, p1) + c2 * _tpow(t, p2)

    return RegularizedProblem(
        base=p,
        m=m,
        residual_forcing=residual,
        subtracted=TaylorPolynomial(p.alpha, seq),
        smoothness=_smoothness(p.alpha, m),
    )


def min_m(alpha: float, k: int) -> int:
    """Smallest integer m with m*alpha strictly above k.

    Advisory helper for picking the subtraction degree; the reference
    studies sometimes sit right at (or slightly under) the threshold, so
    callers remain free to choose m themselves.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"min_m needs alpha in (0,1), got {alpha:g}")
    if k not in (2, 3):
        raise DomainError(f"min_m supports smoothness targets k in {{2,3}}, got {k}")
    m = math.ceil(k / alpha)
    if m * alpha <= k:
        m += 1
    return m


def exact_two_term(p: TwoTermProblem, t: float) -> float:
    """Closed-form solution y0 E_a(-B t^a) of the homogeneous problem."""
    if p.forcing is not None:
        raise UnsupportedProblemError("closed form only available for zero forcing")
    if t < 0.0:
        raise DomainError(f"needs t >= 0, got {t:g}")
    return p.y0 * mittag_leffler(-p.B * _tpow(t, p.alpha), p.alpha)


_THREE_TERM_CLOSED = (3.0, 2.0, 3.0, -4.0)  # (A, C, y0, ya0) with factored symbol


def exact_three_term(p: ThreeTermProblem, t: float) -> float:
    """Closed-form solution 2 E_a(-t^a) + E_a(-2 t^a).

    Only shipped for the coefficient set (A, C, y0, ya0) = (3, 2, 3, -4),
    where the operator factors into first-order terms with roots -1, -2.
    """
    if p.forcing is not None:
        raise UnsupportedProblemError("closed form only available for zero forcing")
    if (p.A, p.C, p.y0, p.ya0) != _THREE_TERM_CLOSED:
        raise UnsupportedProblemError(
            "no closed-form solution shipped for "
            f"(A, C, y0, ya0) = ({p.A:g}, {p.C:g}, {p.y0:g}, {p.ya0:g})"
        )
    if t < 0.0:
        raise DomainError(f"needs t >= 0, got {t:g}")
    ta = _tpow(t, p.alpha)
    return 2.0 * mittag_leffler(-ta, p.alpha) + mittag_leffler(-2.0 * ta, p.alpha)


def exact_regularized(r: RegularizedProblem, t: float) -> float:
    """Exact remainder z(t) = y(t) - T_m(t) of a regularized problem."""
    if isinstance(r.base, TwoTermProblem):
        y = exact_two_term(r.base, t)
    else:
        y = exact_three_term(r.base, t)
    return y - taylor_eval(r.subtracted, t)
