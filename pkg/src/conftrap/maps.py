"""Conformal maps sending the real line onto itself for unilateral decay.

Three maps are provided, each with a closed-form derivative:

* ``STENGER``        x = sinh(log(arcsinh(e^t)))
* ``OKAYAMA_HANADA`` x = 2 sinh(log(arcsinh(e^t)))
* ``PROPOSED``       x = 2 sinh(log(log(1 + e^t)))

Using ``2 sinh(log A) = A - 1/A`` every value reduces to an expression in
``A = arcsinh(e^t)`` or ``L = log(1 + e^t)``, both of which are evaluated
without forming ``e^t`` for large ``t``.

For ``t < -700`` the reciprocal ``1/A`` (or ``1/L``) is at the edge of
overflow; there the value returns ``-inf`` and the derivative ``+inf``.
These sentinels are consumed by :func:`conftrap.engine.transformed_integrand`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError

# e^t overflows doubles near t = 709; switch to the log1p forms well before.
_LARGE_T = 36.0
_SENTINEL_T = -700.0


class MapKind(enum.Enum):
    STENGER = "stenger"
    OKAYAMA_HANADA = "oh"
    PROPOSED = "new"


def _check(t):
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"map argument must be finite, got {t!r}")
    return t


def _arcsinh_exp(t):
    if t > _LARGE_T:
        return t + math.log(1.0 + math.sqrt(1.0 + math.exp(-2.0 * t)))
    return math.asinh(math.exp(t))


def _log1p_exp(t):
    if t > _LARGE_T:
        return t + math.log1p(math.exp(-t))
    return math.log1p(math.exp(t))


def _inv_sqrt_1p_exp_m2t(t):
    # 1/sqrt(1 + e^{-2t}) without overflow for very negative t
    if t >= 0.0:
        return 1.0 / math.sqrt(1.0 + math.exp(-2.0 * t))
    e = math.exp(t)
    return e / math.sqrt(1.0 + e * e)


def _expit(t):
    # e^t / (1 + e^t) = 1 / (1 + e^{-t})
    if t >= 0.0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


def psi_value(t):
    """Stenger's map, ``sinh(log(arcsinh(e^t)))``."""
    t = _check(t)
    if t < _SENTINEL_T:
        return -math.inf
    a = _arcsinh_exp(t)
    return 0.5 * (a - 1.0 / a)


def psi_deriv(t):
    """Derivative of :func:`psi_value`.

    ``(1 + A^2) / (2 sqrt(1 + e^{-2t}) A^2)`` with ``A = arcsinh(e^t)``,
    rearranged as ``(w + (w/A)/A) / 2`` with ``w = 1/sqrt(1 + e^{-2t})`` so
    that no intermediate overflows.
    """
    t = _check(t)
    if t < _SENTINEL_T:
        return math.inf
    a = _arcsinh_exp(t)
    w = _inv_sqrt_1p_exp_m2t(t)
    return 0.5 * (w + (w / a) / a)


def psi_tilde_value(t):
    """Okayama-Hanada map, ``2 sinh(log(arcsinh(e^t)))``."""
    t = _check(t)
    if t < _SENTINEL_T:
        return -math.inf
    a = _arcsinh_exp(t)
    return a - 1.0 / a


def psi_tilde_deriv(t):
    """Derivative of :func:`psi_tilde_value`."""
    t = _check(t)
    if t < _SENTINEL_T:
        return math.inf
    a = _arcsinh_exp(t)
    w = _inv_sqrt_1p_exp_m2t(t)
    return w + (w / a) / a


def phi_value(t):
    """Proposed map, ``2 sinh(log(log(1 + e^t))) = L - 1/L``."""
    t = _check(t)
    if t < _SENTINEL_T:
        return -math.inf
    lg = _log1p_exp(t)
    return lg - 1.0 / lg


def phi_deriv(t):
    """Derivative of :func:`phi_value`.

    ``(1 + L^2) / ((1 + e^{-t}) L^2)``, evaluated as ``s + (s/L)/L`` with
    ``s = 1/(1 + e^{-t})``.
    """
    t = _check(t)
    if t < _SENTINEL_T:
        return math.inf
    lg = _log1p_exp(t)
    s = _expit(t)
    return s + (s / lg) / lg


@dataclass(frozen=True)
class MapDescriptor:
    """A conformal map together with its derivative.

    Attributes
    ----------
    kind : MapKind
    max_strip_half_width : float
        Supremum of admissible ``d``: the map's derivative has singularities
        at ``t = +/- i * max_strip_half_width``.
    """

    kind: MapKind
    max_strip_half_width: float
    value: Callable[[float], float]
    derivative: Callable[[float], float]
    limit_name: str

    @property
    def name(self):
        return self.kind.value


STENGER = MapDescriptor(MapKind.STENGER, math.pi / 2, psi_value, psi_deriv, "pi/2")
OKAYAMA_HANADA = MapDescriptor(
    MapKind.OKAYAMA_HANADA, math.pi / 2, psi_tilde_value, psi_tilde_deriv, "pi/2"
)
PROPOSED = MapDescriptor(MapKind.PROPOSED, math.pi, phi_value, phi_deriv, "pi")

MAPS = {m.kind: m for m in (STENGER, OKAYAMA_HANADA, PROPOSED)}


def get_map(kind):
    """Return the :class:`MapDescriptor` for a :class:`MapKind` or its CLI name."""
    if isinstance(kind, MapDescriptor):
        return kind
    try:
        return MAPS[MapKind(kind)]
    except ValueError:
        raise DomainError(f"unknown map {kind!r}") from None
