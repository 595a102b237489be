"""Scalar special functions in double precision.

The rest of the package needs three ingredients: the gamma function on the
real line, the Riemann zeta function at real arguments (the corrected
kernel weights evaluate it between -2 and 3), and the one- and
two-parameter Mittag-Leffler functions

    E_{a,b}(z) = sum_{n>=0} z^n / gamma(a*n + b),

which express the closed-form solutions of the constant-coefficient
fractional relaxation equations solved here.  All functions are pure and
reentrant.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import DomainError, NonConvergenceError, PoleError

_SERIES_TOL = 1e-16
_SERIES_CAP = 10_000

# B_{2j}/(2j)! for j = 1..6.  Six Bernoulli corrections on top of 20 direct
# terms keep the Euler-Maclaurin remainder far below double rounding for
# every exponent this package evaluates.
_EM_COEFF = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
)
_EM_DIRECT = 20


def gamma(x: float) -> float:
    """Gamma function for real x.

    Raises PoleError at the poles x = 0, -1, -2, ...  Negative non-integer
    arguments are supported (they appear in the order-(3-a) kernel
    normalization 1/gamma(-a)).
    """
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"gamma pole at x = {x:g}")
    return math.gamma(x)


def _zeta_em(s: float) -> float:
    """Euler-Maclaurin evaluation of zeta(s); accurate for s > 0.5, s != 1."""
    n = _EM_DIRECT
    parts = [float(k) ** -s for k in range(1, n)]
    parts.append(n ** (1.0 - s) / (s - 1.0))
    parts.append(0.5 * n ** -s)
    poch = s  # s(s+1)...(s+2j-2), grown two factors per correction
    npow = float(n) ** (-s - 1.0)
    for j, c in enumerate(_EM_COEFF):
        parts.append(c * poch * npow)
        poch *= (s + 2 * j + 1.0) * (s + 2 * j + 2.0)
        npow /= float(n * n)
    return math.fsum(parts)


def zeta(s: float) -> float:
    """Riemann zeta function for real s != 1.

    For s >= 0.5 the Euler-Maclaurin sum is used directly; below 0.5 the
    value is reflected through the functional equation

        zeta(s) = 2^s pi^(s-1) sin(pi s/2) gamma(1-s) zeta(1-s),

    whose right-hand side only needs zeta on s > 0.5.  zeta(0) = -1/2 is
    returned exactly (the functional equation degenerates to 0 * inf there).
    """
    if s == 1.0:
        raise PoleError("zeta pole at s = 1")
    if s == 0.0:
        return -0.5
    if s >= 0.5:
        return _zeta_em(s)
    return (
        2.0 ** s
        * math.pi ** (s - 1.0)
        * math.sin(0.5 * math.pi * s)
        * math.gamma(1.0 - s)
        * _zeta_em(1.0 - s)
    )


@lru_cache(maxsize=None)
def _recip_gamma(x: float) -> float:
    """1/gamma(x) with the convention that a pole contributes zero."""
    if x <= 0.0 and x == math.floor(x):
        return 0.0
    try:
        return 1.0 / math.gamma(x)
    except OverflowError:
        return 0.0


def mittag_leffler(z: float, alpha: float, beta: float = 1.0) -> float:
    """Two-parameter Mittag-Leffler function E_{alpha,beta}(z).

    Direct series with compensated (Kahan-Neumaier) accumulation.  The sum
    stops once a term drops below 1e-16 * (1 + |partial sum|); if that does
    not happen within 10,000 terms, or a term overflows, a
    NonConvergenceError is raised.  Intended for the mildly-cancelling
    range |z| <= a few units that fractional relaxation problems on [0, 1]
    produce; E_{alpha,1} is written E_alpha in the literature.
    """
    if alpha <= 0.0:
        raise DomainError(f"mittag_leffler needs alpha > 0, got {alpha:g}")
    total = 0.0
    comp = 0.0
    zpow = 1.0
    for n in range(_SERIES_CAP):
        term = zpow * _recip_gamma(alpha * n + beta)
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        if abs(term) <= _SERIES_TOL * (1.0 + abs(total + comp)):
            return total + comp
        zpow *= z
        if not math.isfinite(zpow):
            raise NonConvergenceError(
                f"mittag_leffler series term overflow at n={n + 1} "
                f"(alpha={alpha:g}, beta={beta:g}, z={z:g})"
            )
    raise NonConvergenceError(
        f"mittag_leffler did not converge within {_SERIES_CAP} terms "
        f"(alpha={alpha:g}, beta={beta:g}, z={z:g})"
    )
