"""Convergence studies: one row per n, with error and certified bound."""

from __future__ import annotations

import csv
import io
import logging
import math
import statistics
from dataclasses import dataclass
from typing import Optional

from .bounds import Theorem, bound_value, make_bound_spec
from .catalog import IntegrandId, get_integrand, reference_value
from .engine import trapezoid_sum
from .errors import ConftrapError, DomainError
from .maps import MapKind, get_map
from .plan import make_plan

log = logging.getLogger(__name__)

CSV_HEADER = ("integrand", "map", "theorem", "n", "h", "M", "N", "approximation", "abs_error", "bound")
CERTIFICATION_SLACK = 1e-12


class CertificationError(ConftrapError):
    """A computed error exceeded its certified bound."""

    def __init__(self, rows):
        self.rows = rows
        ns = ", ".join(str(r.n) for r in rows)
        super().__init__(f"error exceeds certified bound at n = {ns}")


@dataclass(frozen=True)
class StudyConfig:
    integrand_id: IntegrandId
    theorem: Theorem
    n_range: tuple
    map_kind: Optional[MapKind] = None
    output_path: Optional[str] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None
    d: Optional[float] = None
    K: Optional[float] = None

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "integrand_id", get_integrand(self.integrand_id).id)
        set_(self, "theorem", Theorem(self.theorem))
        set_(self, "map_kind", get_map(self.map_kind or self.theorem.map_kind).kind)
        start, stop, step = self.n_range
        if not (isinstance(start, int) and isinstance(stop, int) and isinstance(step, int)):
            raise DomainError(f"n range must be integers, got {self.n_range!r}")
        if start < 1 or step < 1 or stop < start:
            raise DomainError(f"n range must satisfy 1 <= start <= stop and step >= 1, got {self.n_range!r}")

    @property
    def ns(self):
        start, stop, step = self.n_range
        return range(start, stop + 1, step)

    @property
    def bound_applies(self):
        """The theorem has a computable bound and it belongs to the selected map."""
        return self.theorem is not Theorem.T1 and self.map_kind is self.theorem.map_kind

    def parameters(self):
        row = get_integrand(self.integrand_id).row(self.theorem)
        pick = lambda override, default: default if override is None else override
        return (
            pick(self.alpha, row.alpha),
            pick(self.beta, row.beta),
            pick(self.d, row.d),
            pick(self.K, row.K),
        )


@dataclass(frozen=True)
class ConvergenceRow:
    integrand: str
    map: str
    theorem: int
    n: int
    h: float
    M: int
    N: int
    approximation: float
    abs_error: float
    bound: Optional[float]

    @property
    def certified(self):
        if self.bound is None:
            return True
        return self.abs_error <= self.bound * (1.0 + CERTIFICATION_SLACK)

    def as_csv_fields(self):
        return [
            self.integrand,
            self.map,
            str(self.theorem),
            str(self.n),
            repr(self.h),
            str(self.M),
            str(self.N),
            repr(self.approximation),
            repr(self.abs_error),
            "n/a" if self.bound is None else repr(self.bound),
        ]


def run_study(config: StudyConfig, reference=None):
    """Run the study and return rows in ascending ``n``.

    Strip limits for both the map and (if a bound is computed) the theorem
    are checked before any sum is evaluated. If ``config.output_path`` is
    set the rows are also written there as CSV.
    """
    alpha, beta, d, K = config.parameters()
    spec = get_integrand(config.integrand_id)
    if config.bound_applies:
        bspec = make_bound_spec(config.theorem, alpha, beta, d, K)
    else:
        if config.theorem is not Theorem.T1:
            log.warning(
                "theorem %d bound is only valid for the %s map; bound column suppressed",
                config.theorem.value,
                config.theorem.map_kind.value,
            )
        bspec = None
    # validates d against the map before the loop
    make_plan(alpha, beta, d, K, config.ns[0], config.map_kind)
    ref = reference_value(spec.id) if reference is None else reference
    rows = []
    for n in config.ns:
        plan = make_plan(alpha, beta, d, K, n, config.map_kind)
        value = trapezoid_sum(config.map_kind, spec.evaluate, plan).value
        rows.append(
            ConvergenceRow(
                spec.id.value,
                config.map_kind.value,
                config.theorem.value,
                n,
                plan.h,
                plan.M,
                plan.N,
                value,
                abs(value - ref),
                None if bspec is None else bound_value(bspec, n),
            )
        )
    if config.output_path:
        write_csv(rows, config.output_path)
    return rows


def rows_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv_fields())
    return buf.getvalue()


def write_csv(rows, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(rows_to_csv(rows))


def uncertified(rows):
    return [r for r in rows if not r.certified]


def fitted_log_slope(rows, floor=1e-13):
    """Least-squares slope of ``ln(abs_error)`` against ``sqrt(n)`` above ``floor``."""
    pts = [(math.sqrt(r.n), math.log(r.abs_error)) for r in rows if r.abs_error > floor]
    if len(pts) < 2:
        raise DomainError("need at least two rows above the floor to fit a slope")
    xs, ys = zip(*pts)
    return statistics.linear_regression(xs, ys).slope
