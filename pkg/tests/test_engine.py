import math

import pytest

from conftrap import catalog
from conftrap.bounds import make_bound_spec
from conftrap.engine import transformed_integrand, trapezoid_sum
from conftrap.errors import IntegrandEvaluationError
from conftrap.maps import MAPS, PROPOSED, phi_deriv, phi_value
from conftrap.plan import make_plan


def zero(x):
    return 0.0


@pytest.mark.parametrize("m", list(MAPS.values()), ids=lambda m: m.name)
def test_zero_integrand(m):
    for t in (-5.0, 0.0, 3.0):
        assert transformed_integrand(m, zero, t) == 0.0
    plan = make_plan(1, 1, 1, None, 7, m)
    res = trapezoid_sum(m, zero, plan)
    assert res.value == 0.0
    assert res.evaluations == plan.M + plan.N + 1


def test_composition_at_zero():
    expected = catalog.i1(phi_value(0.0)) * phi_deriv(0.0)
    assert transformed_integrand(PROPOSED, catalog.i1, 0.0) == expected
    assert expected == pytest.approx(catalog.i1(-0.7495478603290181) * 1.5406844905028039, rel=1e-15)


def test_sentinel_point_is_zero():
    assert transformed_integrand(PROPOSED, catalog.i1, -800.0) == 0.0


def test_sentinel_terms_are_counted():
    # alpha tiny against beta pushes M*h past -700
    plan = make_plan(1e-6, 1, 3.0, None, 1, PROPOSED)
    assert plan.M == 1 and plan.h > 700
    res = trapezoid_sum(PROPOSED, lambda x: math.exp(-abs(x)), plan)
    assert res.nonfinite_terms_zeroed == 1
    assert res.evaluations == plan.M + plan.N + 1
    ordinary = make_plan(1, 1, 2.0, None, 50, PROPOSED)
    assert trapezoid_sum(PROPOSED, catalog.i1, ordinary).nonfinite_terms_zeroed == 0


def test_nan_integrand_raises_with_context():
    plan = make_plan(1, 1, 1, None, 3, PROPOSED)
    with pytest.raises(IntegrandEvaluationError) as info:
        trapezoid_sum(PROPOSED, lambda x: math.nan, plan)
    assert info.value.t == -plan.M * plan.h
    assert info.value.x == phi_value(info.value.t)


def test_i3_theorem3_row_n60():
    row = catalog.get_integrand("i3").row(3)
    plan = make_plan(row.alpha, row.beta, row.d, row.K, 60, PROPOSED)
    res = trapezoid_sum(PROPOSED, catalog.i3, plan)
    b = make_bound_spec(3, row.alpha, row.beta, row.d, row.K).bound(60)
    assert abs(res.value - 1.136877446810281) <= b
    assert res.evaluations == 100


def test_i1_theorem4_n25_certified():
    row = catalog.get_integrand("i1").row(4)
    plan = make_plan(row.alpha, row.beta, row.d, row.K, 25, PROPOSED)
    value = trapezoid_sum(PROPOSED, catalog.i1, plan).value
    b = make_bound_spec(4, row.alpha, row.beta, row.d, row.K).bound(25)
    assert abs(value - catalog.reference_value("i1")) <= b


def test_bit_identical_repeats():
    plan = make_plan(1, math.pi / 2, 1.5, 9, 80, PROPOSED)
    vals = {trapezoid_sum(PROPOSED, catalog.i3, plan).value for _ in range(5)}
    assert len(vals) == 1
