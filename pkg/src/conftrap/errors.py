"""Exception hierarchy for conftrap."""


class ConftrapError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ConftrapError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class UnsupportedRangeError(DomainError):
    """The argument is mathematically valid but not covered by the implementation."""


class StripViolationError(DomainError):
    """The strip half-width ``d`` is not below the limit required by a map or theorem."""

    def __init__(self, d, limit, limit_name, context=""):
        self.d = d = float(d)
        self.limit = limit
        self.limit_name = limit_name
        where = f" for {context}" if context else ""
        super().__init__(f"d={d!r} must satisfy 0 < d < {limit_name} (= {limit!r}){where}")


class IntegrandEvaluationError(ConftrapError):
    """The integrand returned NaN at a finite point."""

    def __init__(self, t, x, value):
        self.t = t
        self.x = x
        self.value = value
        super().__init__(f"integrand returned {value!r} at x={x!r} (t={t!r})")
