import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftrap.errors import DomainError, StripViolationError
from conftrap.maps import MapKind
from conftrap.plan import QuadraturePlan, make_plan, mesh_size, select_mn

pos = st.floats(min_value=0.05, max_value=20.0)
ns = st.integers(min_value=1, max_value=500)


@pytest.mark.parametrize(
    "alpha, beta, n, expected",
    [
        (1, 1, 10, (10, 10, 1.0)),
        (1, math.pi / 2, 10, (10, 7, 1.0)),
        (1, Fraction(1, 2), 8, (4, 8, 0.5)),
        (1, 0.5, 8, (4, 8, 0.5)),
        (Fraction(1, 3), Fraction(2, 3), 9, (9, 5, 1 / 3)),
    ],
)
def test_select_mn(alpha, beta, n, expected):
    assert select_mn(alpha, beta, n) == expected


def test_exact_rational_ceiling():
    # 0.1*30/0.3 is 10.000000000000002 in doubles; the exact ratio is 10
    assert select_mn(Fraction(1, 10), Fraction(3, 10), 30)[1] == 10
    assert select_mn(0.1, 0.3, 30)[1] in (10, 11)


@pytest.mark.parametrize("bad", [(0, 1, 1), (1, -1, 1), (1, 1, 0), (1, 1, 2.5), (math.nan, 1, 1)])
def test_select_mn_rejects(bad):
    with pytest.raises(DomainError):
        select_mn(*bad)


def test_mesh_size_examples():
    assert mesh_size(1.5, 1, 12) == pytest.approx(math.sqrt(math.pi / 4), rel=1e-15)
    assert mesh_size(1.5, 1, 12) == pytest.approx(0.886227, abs=1e-6)
    assert mesh_size(2, 1, 1) == pytest.approx(math.sqrt(4 * math.pi), rel=1e-15)


@given(pos, pos, ns)
def test_mesh_size_quarter_scaling(d, mu, n):
    assert mesh_size(d, mu, 4 * n) == pytest.approx(mesh_size(d, mu, n) / 2, rel=1e-15)


@given(pos, pos, ns)
def test_plan_invariants(alpha, beta, n):
    p = QuadraturePlan(alpha, beta, 1.0, n)
    mu = min(alpha, beta)
    assert p.mu == mu
    if alpha <= beta:
        assert p.M == n and p.N == math.ceil(alpha * n / beta)
    else:
        assert p.N == n and p.M == math.ceil(beta * n / alpha)
    assert p.h == pytest.approx(math.sqrt(2 * math.pi / (mu * n)))
    # each tail's truncation exponent dominates mu*n*h
    assert alpha * p.M * p.h >= mu * n * p.h * (1 - 1e-15)
    assert beta * p.N * p.h >= mu * n * p.h * (1 - 1e-15)


def test_table_row_plan():
    p = make_plan(1, 1, 3, 78, 25, MapKind.PROPOSED)
    assert (p.mu, p.M, p.N) == (1.0, 25, 25)
    assert p.h == pytest.approx(math.sqrt(6 * math.pi / 25), rel=1e-15)
    assert p.K == 78.0


def test_n_one():
    p = make_plan(1, 1, 2, None, 1, MapKind.PROPOSED)
    assert (p.M, p.N) == (1, 1)
    assert p.h == pytest.approx(math.sqrt(4 * math.pi))
    assert p.K is None


def test_strip_violation_names_limit():
    with pytest.raises(StripViolationError, match=r"pi/2") as info:
        make_plan(1, 1, 3, 1, 10, MapKind.OKAYAMA_HANADA)
    assert info.value.limit == math.pi / 2
    with pytest.raises(StripViolationError, match=r"< pi "):
        make_plan(1, 1, math.pi, 1, 10, "new")


def test_plan_is_immutable():
    p = QuadraturePlan(1, 1, 1, 5)
    with pytest.raises(AttributeError):
        p.n = 6
    assert p == QuadraturePlan(1, 1, 1, 5)
