"""Small-argument power series for E1, Ci and Si.

Only ``0 < x <= 2`` is supported; that covers the reference values needed
by the integrand catalog (all at ``x = 1``). Larger arguments raise
:class:`~conftrap.errors.UnsupportedRangeError` instead of returning an
inaccurate value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UnsupportedRangeError

EULER_GAMMA = 0.57721566490153286061

_TERM_TOL = 1e-18
_MAX_TERMS = 200
_X_MAX = 2.0


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    converged: bool
    last_term: float


def _sum_series(term, first_k):
    terms = []
    k = first_k
    t = 0.0
    while len(terms) < _MAX_TERMS:
        t = term(k)
        terms.append(t)
        if abs(t) < _TERM_TOL:
            break
        k += 1
    converged = abs(t) < _TERM_TOL
    return terms, converged


def _check_x(x, allow_zero=False):
    x = float(x)
    if math.isnan(x) or x < 0.0 or (x == 0.0 and not allow_zero):
        raise DomainError(f"argument must be {'>=' if allow_zero else '>'} 0, got {x!r}")
    if x > _X_MAX:
        raise UnsupportedRangeError(f"only 0 < x <= {_X_MAX} is implemented, got {x!r}")
    return x


def e1_series(x) -> SeriesResult:
    """E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)."""
    x = _check_x(x)
    terms, ok = _sum_series(
        lambda k: (-1.0) ** (k + 1) * x**k / (k * math.factorial(k)), 1
    )
    value = math.fsum([-EULER_GAMMA, -math.log(x), *terms])
    return SeriesResult(value, len(terms), ok, terms[-1])


def ci_series(x) -> SeriesResult:
    """Ci(x) = gamma + ln x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)."""
    x = _check_x(x)
    terms, ok = _sum_series(
        lambda k: (-1.0) ** k * x ** (2 * k) / (2 * k * math.factorial(2 * k)), 1
    )
    value = math.fsum([EULER_GAMMA, math.log(x), *terms])
    return SeriesResult(value, len(terms), ok, terms[-1])


def si_upper_series(x) -> SeriesResult:
    """Si(x) = sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1) (2k+1)!)."""
    x = _check_x(x, allow_zero=True)
    if x == 0.0:
        return SeriesResult(0.0, 0, True, 0.0)
    terms, ok = _sum_series(
        lambda k: (-1.0) ** k
        * x ** (2 * k + 1)
        / ((2 * k + 1) * math.factorial(2 * k + 1)),
        0,
    )
    return SeriesResult(math.fsum(terms), len(terms), ok, terms[-1])


def exp_integral_e1(x):
    """Exponential integral ``E1(x) = int_1^inf e^{-tx}/t dt`` for ``0 < x <= 2``."""
    return e1_series(x).value


def cosine_integral_ci(x):
    """Cosine integral ``Ci(x) = -int_x^inf cos(t)/t dt`` for ``0 < x <= 2``."""
    return ci_series(x).value


def sine_integral_si(x):
    """Sine integral ``Si(x) = int_0^x sin(t)/t dt`` for ``0 <= x <= 2``."""
    return si_upper_series(x).value


def sine_integral_si_lower(x):
    """``si(x) = -int_x^inf sin(t)/t dt = Si(x) - pi/2`` for ``0 <= x <= 2``."""
    return math.fsum([si_upper_series(x).value, -math.pi / 2])
