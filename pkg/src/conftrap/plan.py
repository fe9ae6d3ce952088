"""Choice of truncation limits M, N and mesh size h from (alpha, beta, d, n)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Optional

from .errors import DomainError, StripViolationError
from .maps import MapDescriptor, get_map


def _positive(name, value):
    try:
        ok = value > 0 and math.isfinite(float(value))
    except (TypeError, ValueError):
        ok = False
    if not ok:
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")


def _positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")


def _ceil_ratio(num, den, n):
    # exact when both are rationals; plain ceil otherwise (may over-count by one,
    # which only shrinks the truncation error)
    if isinstance(num, Rational) and isinstance(den, Rational):
        return math.ceil(Fraction(num) * n / Fraction(den))
    return math.ceil(float(num) * n / float(den))


def select_mn(alpha, beta, n):
    """Return ``(M, N, mu)`` with ``mu = min(alpha, beta)``.

    If ``mu == alpha`` then ``M = n`` and ``N = ceil(alpha*n/beta)``,
    otherwise ``N = n`` and ``M = ceil(beta*n/alpha)``. Pass ``int`` or
    :class:`fractions.Fraction` values to get an exact ceiling.
    """
    _positive("alpha", alpha)
    _positive("beta", beta)
    _positive_int("n", n)
    if alpha <= beta:
        return n, _ceil_ratio(alpha, beta, n), float(alpha)
    return _ceil_ratio(beta, alpha, n), n, float(beta)


def mesh_size(d, mu, n):
    """Mesh size ``h = sqrt(2 pi d / (mu n))``."""
    _positive("d", d)
    _positive("mu", mu)
    _positive_int("n", n)
    return math.sqrt(2.0 * math.pi * float(d) / (float(mu) * n))


@dataclass(frozen=True)
class QuadraturePlan:
    """Immutable set of parameters for one truncated trapezoidal sum.

    ``K`` is ``None`` when no computable bound constant is available.
    """

    alpha: float
    beta: float
    d: float
    n: int
    K: Optional[float] = None
    mu: float = field(init=False)
    M: int = field(init=False)
    N: int = field(init=False)
    h: float = field(init=False)

    def __post_init__(self):
        if self.K is not None:
            _positive("K", self.K)
        M, N, mu = select_mn(self.alpha, self.beta, self.n)
        h = mesh_size(self.d, mu, self.n)
        set_ = object.__setattr__
        set_(self, "alpha", float(self.alpha))
        set_(self, "beta", float(self.beta))
        set_(self, "d", float(self.d))
        if self.K is not None:
            set_(self, "K", float(self.K))
        set_(self, "mu", mu)
        set_(self, "M", M)
        set_(self, "N", N)
        set_(self, "h", h)

    @property
    def evaluations(self):
        return self.M + self.N + 1


def check_strip(d, map_descriptor: MapDescriptor):
    if not float(d) < map_descriptor.max_strip_half_width:
        raise StripViolationError(
            d,
            map_descriptor.max_strip_half_width,
            map_descriptor.limit_name,
            f"the {map_descriptor.name} map",
        )


def make_plan(alpha, beta, d, K, n, map_kind) -> QuadraturePlan:
    """Build a :class:`QuadraturePlan`, checking ``d`` against the map's strip limit."""
    _positive("d", d)
    check_strip(d, get_map(map_kind))
    return QuadraturePlan(alpha, beta, d, n, K)
