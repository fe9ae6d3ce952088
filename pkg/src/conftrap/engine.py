"""Truncated trapezoidal sum over a conformally mapped integrand."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import IntegrandEvaluationError
from .maps import get_map
from .plan import QuadraturePlan, check_strip


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    evaluations: int
    nonfinite_terms_zeroed: int


def _transformed(m, f, t):
    # returns (F(t), zeroed)
    x = m.value(t)
    dx = m.derivative(t)
    if not (math.isfinite(x) and math.isfinite(dx)):
        return 0.0, True
    y = f(x)
    if math.isnan(y):
        raise IntegrandEvaluationError(t, x, y)
    return y * dx, False


def transformed_integrand(map_kind, f, t):
    """``F(t) = f(map(t)) * map'(t)``.

    At points where the map returned an overflow sentinel the result is 0.
    Use :func:`trapezoid_sum` to have such points counted.
    """
    return _transformed(get_map(map_kind), f, t)[0]


def trapezoid_sum(map_kind, f, plan: QuadraturePlan) -> QuadratureResult:
    """Evaluate ``h * sum_{k=-M}^{N} f(map(kh)) map'(kh)``.

    Nodes are visited in ascending ``k`` and the terms are added with
    :func:`math.fsum`, so the result is correctly rounded and bit-identical
    across runs.
    """
    m = get_map(map_kind)
    check_strip(plan.d, m)
    h = plan.h
    terms = []
    zeroed = 0
    for k in range(-plan.M, plan.N + 1):
        y, z = _transformed(m, f, k * h)
        terms.append(y)
        zeroed += z
    return QuadratureResult(h * math.fsum(terms), len(terms), zeroed)
