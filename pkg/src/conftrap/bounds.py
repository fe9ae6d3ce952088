"""Computable a-priori error bounds for the mapped trapezoidal formula.

Each bound has the form::

    K * (2 C_a / (1 - exp(-sqrt(2 pi d mu))) + C_b) * exp(-sqrt(2 pi d mu n))

with ``(C_a, C_b)`` equal to ``(C1, C2)`` for the Okayama-Hanada map
(``T2``), and ``(C3, C4)`` or ``(C5, C6)`` for the proposed map under the
general (``T3``) or the sharper special (``T4``) decay condition. Stenger's
formula (``T1``) has no computable constant, so only the rate
``exp(-sqrt(2 pi d mu n))`` is available via :func:`rate_envelope`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, StripViolationError
from .maps import MapKind
from .plan import _positive, _positive_int

E = math.e
LOG2 = math.log(2.0)
SIGMA = 1.0 / math.asinh(1.0)
LAMBDA = 1.0 / LOG2


class Theorem(enum.Enum):
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4

    @property
    def map_kind(self):
        return _THEOREM_MAP[self]

    @property
    def strip_limit(self):
        return _STRIP_LIMITS[self]


_THEOREM_MAP = {
    Theorem.T1: MapKind.STENGER,
    Theorem.T2: MapKind.OKAYAMA_HANADA,
    Theorem.T3: MapKind.PROPOSED,
    Theorem.T4: MapKind.PROPOSED,
}

_STRIP_LIMITS = {
    Theorem.T1: (math.pi / 2, "pi/2"),
    Theorem.T2: (math.pi / 2, "pi/2"),
    Theorem.T3: (math.pi, "pi"),
    Theorem.T4: ((1 + math.pi) / 2, "(1+pi)/2"),
}


def _validate(theorem, alpha, beta, d):
    _positive("alpha", alpha)
    _positive("beta", beta)
    _positive("d", d)
    limit, name = theorem.strip_limit
    if not d < limit:
        raise StripViolationError(d, limit, name, f"theorem {theorem.value}")
    return float(alpha), float(beta), float(d)


def constants_t2(alpha, beta, d):
    """``(C1, C2)`` for the Okayama-Hanada map, ``0 < d < pi/2``."""
    alpha, beta, d = _validate(Theorem.T2, alpha, beta, d)
    gamma_d = 1.0 / math.cos(d)
    s = 1.0 + 1.0 / math.sin(1.0) ** 2
    c1 = (gamma_d / (alpha * math.atan(gamma_d))) * (gamma_d / 2.0 * s) ** alpha + (
        (1.0 + SIGMA**2) * math.sqrt(gamma_d) / beta
    ) * (math.sqrt(2.0) * math.exp(SIGMA) / math.cos(d / 2.0)) ** beta
    c2 = (s / 2.0) ** alpha / alpha + ((1.0 + SIGMA**2) / beta) * (
        math.exp(SIGMA) / 2.0
    ) ** beta
    return c1, c2


def _right_tail_terms(beta, c_d):
    odd = (1.0 + LAMBDA**2) * c_d / beta * (math.exp(LAMBDA) * c_d) ** beta
    even = (1.0 + LAMBDA**2) / beta * math.exp(LAMBDA) ** beta
    return odd, even


def constants_t3(alpha, beta, d):
    """``(C3, C4)`` for the proposed map, general case ``0 < d < pi``."""
    alpha, beta, d = _validate(Theorem.T3, alpha, beta, d)
    c_d = 1.0 / math.cos(d / 2.0)
    lg = math.log(2.0 + c_d)
    base = E * c_d / ((1.0 - LOG2) * (E - 1.0))
    odd, even = _right_tail_terms(beta, c_d)
    c3 = (1.0 / (alpha + 1.0) + 1.0 / alpha) * base ** (alpha + 1.0) * (
        (1.0 + lg * lg) / (lg * lg)
    ) * (1.0 + c_d) ** 2 + odd
    c4 = math.exp(1.0 / math.pi**3) / (alpha * (1.0 - LOG2) ** (alpha + 1.0)) + even
    return c3, c4


def constants_t4(alpha, beta, d):
    """``(C5, C6)`` for the proposed map, special case ``0 < d < (1+pi)/2``."""
    alpha, beta, d = _validate(Theorem.T4, alpha, beta, d)
    c_d = 1.0 / math.cos(d / 2.0)
    base = E * c_d / ((1.0 - LOG2) * (E - 1.0))
    odd, even = _right_tail_terms(beta, c_d)
    c5 = base**alpha / alpha * (1.0 + c_d) / math.log(2.0 + c_d) + odd
    c6 = 1.0 / (alpha * (1.0 - LOG2) ** alpha) + even
    return c5, c6


_CONSTANTS = {Theorem.T2: constants_t2, Theorem.T3: constants_t3, Theorem.T4: constants_t4}


@dataclass(frozen=True)
class BoundSpec:
    """Everything needed to evaluate a bound at any ``n``.

    ``constants`` is ``None`` for ``T1``; ``aux`` holds the auxiliary
    quantities the constants were built from (``gamma_d`` and ``sigma`` for
    ``T2``, ``c_d`` and ``lambda`` for ``T3``/``T4``).
    """

    theorem: Theorem
    alpha: float
    beta: float
    d: float
    K: Optional[float]
    mu: float
    constants: Optional[tuple]
    aux: dict

    def bound(self, n):
        return bound_value(self, n)


def make_bound_spec(theorem, alpha, beta, d, K=None) -> BoundSpec:
    theorem = Theorem(theorem)
    a, b, dd = _validate(theorem, alpha, beta, d)
    mu = min(a, b)
    if theorem is Theorem.T1:
        return BoundSpec(theorem, a, b, dd, None if K is None else float(K), mu, None, {})
    if K is None:
        raise DomainError(f"theorem {theorem.value} requires the constant K")
    _positive("K", K)
    constants = _CONSTANTS[theorem](a, b, dd)
    if theorem is Theorem.T2:
        aux = {"gamma_d": 1.0 / math.cos(dd), "sigma": SIGMA}
    else:
        aux = {"c_d": 1.0 / math.cos(dd / 2.0), "lambda": LAMBDA}
    return BoundSpec(theorem, a, b, dd, float(K), mu, constants, aux)


def bound_value(spec: BoundSpec, n):
    """Certified error bound at ``n`` (``T2``, ``T3`` and ``T4`` only)."""
    if spec.theorem is Theorem.T1:
        raise DomainError("theorem 1 has no computable bound; use rate_envelope")
    _positive_int("n", n)
    c_odd, c_even = spec.constants
    rate = math.sqrt(2.0 * math.pi * spec.d * spec.mu)
    return spec.K * (2.0 * c_odd / -math.expm1(-rate) + c_even) * math.exp(-rate * math.sqrt(n))


def rate_envelope(d, mu, n):
    """``exp(-sqrt(2 pi d mu n))``, the convergence shape without its constant."""
    _positive("d", d)
    _positive("mu", mu)
    _positive_int("n", n)
    return math.exp(-math.sqrt(2.0 * math.pi * float(d) * float(mu) * n))
