"""Sampled checks of the real-line inequalities behind the error bounds.

Each check draws uniform samples from a fixed interval, adds deterministic
probes at the interval ends (where equality tends to hold), and reports the
smallest margin ``bound_side - bounded_side``. A sample is a violation only
when the margin is below ``-TOL``, to allow for rounding at equality points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TOL = 1e-15
E_INV_PI3 = float(np.exp(1.0 / np.pi**3))
ONE_OVER_ONE_MINUS_LOG2 = float(1.0 / (1.0 - np.log(2.0)))


@dataclass(frozen=True)
class InequalityCheckReport:
    name: str
    samples: int
    violations: int
    worst_margin: float

    @property
    def passed(self):
        return self.violations == 0

    def __str__(self):
        status = "ok" if self.passed else "FAIL"
        return (
            f"{self.name}: {status} samples={self.samples} "
            f"violations={self.violations} worst_margin={self.worst_margin:.3e}"
        )


def _draw(samples, seed, lo, hi, probes):
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    x = rng.uniform(lo, hi, size=samples)
    return np.concatenate([np.asarray(probes, dtype=float), x])


def _report(name, margin):
    return InequalityCheckReport(
        name, int(margin.size), int(np.count_nonzero(margin < -TOL)), float(margin.min())
    )


def _log1p_exp(x):
    return np.logaddexp(0.0, x)


def check_arccos_bound(samples=10**6, seed=42):
    """``arccos(t/2) >= sqrt(2 - t)`` on ``[0, 2]``."""
    t = _draw(samples, seed, 0.0, 2.0, [0.0, 2.0, 1.0, np.nextafter(2.0, 0.0)])
    return _report("arccos_bound", np.arccos(t / 2.0) - np.sqrt(2.0 - t))


def check_exp_log_real(samples=10**6, seed=42):
    """``L/(1+L) * (1+e^x)/e^x <= 1`` with ``L = log(1+e^x)`` on ``[-40, 40]``."""
    x = _draw(samples, seed, -40.0, 40.0, [-40.0, 0.0, 40.0])
    lg = _log1p_exp(x)
    # (1 + e^x)/e^x = 1 + e^{-x}
    lhs = lg / (1.0 + lg) * (1.0 + np.exp(-x))
    return _report("exp_log_real", 1.0 - np.abs(lhs))


def check_one_minus_log_bound(samples=10**6, seed=42):
    """``1/|-1 + log(1+e^x)| <= 1/(1 - log 2)`` for ``x < 0``."""
    x = _draw(samples, seed, -40.0, 0.0, [-40.0, -1e-300, -np.finfo(float).eps])
    x = x[x < 0.0]
    lhs = 1.0 / np.abs(-1.0 + _log1p_exp(x))
    return _report("one_minus_log_bound", ONE_OVER_ONE_MINUS_LOG2 - lhs)


def check_real_func_bounds(samples=10**6, seed=42):
    """Both real-axis bounds on ``t = log(1+e^x)`` over ``[-40, 40]``.

    ``(1+t^2)(1-e^{-t})^2/t^2 <= e^{1/pi^3}`` and ``(1-e^{-t})/t <= 1``;
    the report covers both, so ``samples`` counts each point twice. The first
    inequality peaks between ``t = log 108`` and ``t = log 109``; that point
    is always probed.
    """
    peak_x = float(np.log(np.expm1(np.log(108.5))))
    x = _draw(samples, seed, -40.0, 40.0, [-40.0, 0.0, 40.0, peak_x])
    t = _log1p_exp(x)
    one_m = -np.expm1(-t)
    p = (1.0 + t * t) * one_m * one_m / (t * t)
    q = one_m / t
    return _report("real_func_bounds", np.concatenate([E_INV_PI3 - p, 1.0 - q]))


CHECKS = {
    "arccos_bound": check_arccos_bound,
    "exp_log_real": check_exp_log_real,
    "one_minus_log_bound": check_one_minus_log_bound,
    "real_func_bounds": check_real_func_bounds,
}


def run_all(samples=10**6, seed=42):
    return [check(samples, seed) for check in CHECKS.values()]
