"""
Exponent schedule p_s(eps) trading slippage growth against trade size.

With x = s + sqrt(s**2 - s), the larger root of x**2 - 2 s x + s = 0, the
schedule p(eps) = log(x) / log(C/eps) makes

    (2 C**p - eps**p)**(1/p) = C**2 / (s**(1/p) * eps)

hold exactly, so the required input grows like eps**(-c) with
c = 1 - log(s)/log(x) < 1 while geometric-pool slippage grows like 1/eps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import ConfigError, DomainError
from ._closed_form import log_delta1_of_eps


@dataclass(frozen=True, slots=True)
class ScheduleParams:
    """Level C > 2 and shape s with 1 < s < C/2."""

    level: float
    s: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.level) and self.level > 2.0):
            raise ConfigError(f"schedule requires C > 2, got C={self.level!r}")
        if not 1.0 < self.s < self.level / 2.0:
            raise ConfigError(
                f"schedule requires 1 < s < C/2, got s={self.s!r} with C={self.level!r}"
            )

    @property
    def x(self) -> float:
        """The chosen root s + sqrt(s**2 - s)."""
        return _root(self.s)


def _root(s: float) -> float:
    return s + math.sqrt(s * (s - 1.0))


def _check_eps(eps: float) -> None:
    if not 0.0 < eps < 1.0:
        raise DomainError(f"schedule requires 0 < eps < 1, got {eps!r}")


def schedule_p(params: ScheduleParams, eps: float) -> float:
    """p(eps) = log(s + sqrt(s**2 - s)) / log(C/eps), in (0, 1] for eps < 1."""
    _check_eps(eps)
    return math.log(params.x) / (math.log(params.level) - math.log(eps))


def exponent_c(s: float) -> float:
    """c(s) = 1 - log(s) / log(s + sqrt(s**2 - s)), in (0, 1) for s > 1."""
    if not (math.isfinite(s) and s > 1.0):
        raise DomainError(f"exponent requires s > 1, got {s!r}")
    return 1.0 - math.log(s) / math.log(_root(s))


def scaled_trade_constant(params: ScheduleParams) -> float:
    """C**(2 - log s / log x): the eps-invariant value of
    (2 C**p - eps**p)**(1/p) * eps**c along the schedule."""
    return params.level ** (2.0 - math.log(params.s) / math.log(params.x))


def theorem_identity_residual(params: ScheduleParams, eps: float) -> float:
    """
    Relative gap between (2 C**p - eps**p)**(1/p) and C**2 / (s**(1/p) eps)
    at p = p(eps).

    Both sides are formed in the log domain, so the check stays finite for
    eps far below where the powers overflow.

    Args:
        params: Schedule parameters.
        eps: Remaining output reserve, 0 < eps < 1.

    Returns:
        lhs/rhs - 1.
    """
    p = schedule_p(params, eps)
    lhs = log_delta1_of_eps(p, params.level, eps)
    rhs = 2.0 * math.log(params.level) - math.log(params.s) / p - math.log(eps)
    return math.expm1(lhs - rhs)


__all__: tuple[str, ...] = (
    "ScheduleParams",
    "exponent_c",
    "scaled_trade_constant",
    "schedule_p",
    "theorem_identity_residual",
)
