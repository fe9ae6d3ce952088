"""Trapezoidal quadrature for unilateral rapidly decreasing integrands.

A conformal map turns an integrand that decays exponentially at ``+inf`` but
only algebraically at ``-inf`` into one with double-sided exponential decay,
after which the truncated trapezoidal rule converges like
``exp(-sqrt(2 pi d mu n))``. For the Okayama-Hanada map and the proposed
``log(1 + e^t)`` map the error comes with a fully computable bound.

Basic use::

    from conftrap import make_plan, trapezoid_sum, make_bound_spec, PROPOSED

    plan = make_plan(alpha=1, beta=1, d=2, K=1.2, n=50, map_kind=PROPOSED)
    approx = trapezoid_sum(PROPOSED, f, plan).value
    bound = make_bound_spec(4, 1, 1, 2, K=1.2).bound(50)
"""

from .bounds import (
    BoundSpec,
    Theorem,
    bound_value,
    constants_t2,
    constants_t3,
    constants_t4,
    make_bound_spec,
    rate_envelope,
)
from .catalog import (
    CATALOG,
    IntegrandId,
    IntegrandSpec,
    get_integrand,
    integrand_value,
    parameter_rows,
    reference_value,
)
from .engine import QuadratureResult, transformed_integrand, trapezoid_sum
from .errors import (
    ConftrapError,
    DomainError,
    IntegrandEvaluationError,
    StripViolationError,
    UnsupportedRangeError,
)
from .maps import (
    MAPS,
    OKAYAMA_HANADA,
    PROPOSED,
    STENGER,
    MapDescriptor,
    MapKind,
    get_map,
    phi_deriv,
    phi_value,
    psi_deriv,
    psi_tilde_deriv,
    psi_tilde_value,
    psi_value,
)
from .plan import QuadraturePlan, make_plan, mesh_size, select_mn
from .special import (
    cosine_integral_ci,
    exp_integral_e1,
    sine_integral_si,
    sine_integral_si_lower,
)
from .study import ConvergenceRow, StudyConfig, run_study

__version__ = "0.1.0"
