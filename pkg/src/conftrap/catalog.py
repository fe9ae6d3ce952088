"""The three test integrands with their decay parameters and exact values.

============  ==========================================================
``I1``        {1/(sqrt(1+(x/2)^2) + 1 - x/2)}^2 exp(-x/2 - sqrt(1+(x/2)^2))
``I2``        exp(-x/2 - sqrt(1+(x/2)^2)) / (4 + x^2)
``I3``        (1/2)(1 + x/sqrt(4+x^2)) / (1 + exp(pi x / 2))
============  ==========================================================

All three decay exponentially as ``x -> +inf`` but only algebraically as
``x -> -inf``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .bounds import Theorem
from .errors import DomainError
from .special import cosine_integral_ci, exp_integral_e1, sine_integral_si_lower


class IntegrandId(enum.Enum):
    I1 = "i1"
    I2 = "i2"
    I3 = "i3"


class ReferenceRecipe(enum.Enum):
    FROM_E1 = "from_e1"
    FROM_CI_SI = "from_ci_si"
    LITERAL = "literal"


def _check(x):
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"integrand argument must be finite, got {x!r}")
    return x


def _gap(x):
    # g = sqrt(1 + u^2) - u with u = x/2; g * (sqrt(1 + u^2) + u) = 1
    u = 0.5 * x
    s = math.hypot(1.0, u)
    return 1.0 / (s + u) if u > 0.0 else s - u


def i1(x):
    x = _check(x)
    g = _gap(x)
    # -x/2 - sqrt(1 + (x/2)^2) == -1/g
    r = 1.0 / (1.0 + g)
    return math.exp(-1.0 / g) * r * r


def i2(x):
    x = _check(x)
    g = _gap(x)
    return math.exp(-1.0 / g) / (4.0 + x * x)


def i3(x):
    x = _check(x)
    r = math.hypot(2.0, x)
    if x >= 0.0:
        left = 0.5 * (1.0 + x / r)
    else:
        # 1 + x/r = 4 / (r (r - x)) avoids cancellation
        left = 2.0 / (r * (r - x))
    z = 0.5 * math.pi * x
    if z > 0.0:
        e = math.exp(-z)
        right = e / (1.0 + e)
    else:
        right = 1.0 / (1.0 + math.exp(z))
    return left * right


I3_REFERENCE_LITERAL = "1.136877446810281077257"


@dataclass(frozen=True)
class ParameterRow:
    theorem: Theorem
    alpha: object
    beta: object
    d: object
    K: Optional[object]


@dataclass(frozen=True)
class IntegrandSpec:
    id: IntegrandId
    evaluate: Callable[[float], float]
    rows: tuple
    reference: ReferenceRecipe
    formula: str

    def row(self, theorem) -> ParameterRow:
        theorem = Theorem(theorem)
        for r in self.rows:
            if r.theorem is theorem:
                return r
        raise KeyError(theorem)


def _rows(*entries):
    return tuple(ParameterRow(Theorem(i + 1), *e) for i, e in enumerate(entries))


F = Fraction
PI = math.pi

CATALOG = {
    IntegrandId.I1: IntegrandSpec(
        IntegrandId.I1,
        i1,
        _rows((1, F(1, 2), F(3, 2), None), (1, 1, F(3, 2), 1), (1, 1, 3, 78), (1, 1, 2, F(6, 5))),
        ReferenceRecipe.FROM_E1,
        "{1/(sqrt(1+(x/2)^2)+1-x/2)}^2 exp(-x/2-sqrt(1+(x/2)^2))",
    ),
    IntegrandId.I2: IntegrandSpec(
        IntegrandId.I2,
        i2,
        _rows((1, F(1, 2), F(3, 2), None), (1, 1, F(3, 2), F(16, 9)), (1, 1, 2, 215), (1, 1, 2, 39)),
        ReferenceRecipe.FROM_CI_SI,
        "exp(-x/2-sqrt(1+(x/2)^2))/(4+x^2)",
    ),
    IntegrandId.I3: IntegrandSpec(
        IntegrandId.I3,
        i3,
        _rows((1, PI / 4, F(3, 2), None), (1, PI / 2, F(3, 2), 12), (1, PI / 2, F(3, 2), 9), (1, PI / 2, F(3, 2), F(9, 2))),
        ReferenceRecipe.LITERAL,
        "(1/2)(1+x/sqrt(4+x^2))/(1+exp(pi x/2))",
    ),
}


def get_integrand(id_) -> IntegrandSpec:
    if isinstance(id_, IntegrandSpec):
        return id_
    try:
        return CATALOG[IntegrandId(id_.lower() if isinstance(id_, str) else id_)]
    except ValueError:
        raise DomainError(f"unknown integrand {id_!r}") from None


def integrand_value(id_, x):
    return get_integrand(id_).evaluate(x)


def parameter_rows(id_):
    return list(get_integrand(id_).rows)


def reference_value(id_):
    """Exact value of the integral over the real line, as a double."""
    spec = get_integrand(id_)
    if spec.reference is ReferenceRecipe.FROM_E1:
        return math.fsum([3.0, -4.0 * math.e * exp_integral_e1(1.0)])
    if spec.reference is ReferenceRecipe.FROM_CI_SI:
        return math.fsum(
            [
                cosine_integral_ci(1.0) * math.sin(1.0),
                -sine_integral_si_lower(1.0) * math.cos(1.0),
            ]
        )
    return float(I3_REFERENCE_LITERAL)
