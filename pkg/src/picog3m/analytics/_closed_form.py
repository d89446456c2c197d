"""
Closed forms for the two-asset, uniform-weight pair trade.

The trade buys asset 2 with asset 1 and leaves ``eps`` = R_2 - lam_2 of
asset 2 in the pool.
"""

from __future__ import annotations

import math

from ..errors import DomainError
from ..means import power_shift, power_unshift


def _check_p(p: float) -> None:
    if not 0.0 < p <= 1.0:
        raise DomainError(f"p must lie in (0, 1], got {p!r}")


def _check_eps(eps: float, r2: float) -> None:
    if not 0.0 < eps < r2:
        raise DomainError(f"eps must satisfy 0 < eps < R2={r2!r}, got {eps!r}")


def delta1_of_eps(p: float, level: float, r1: float, eps: float) -> float:
    """
    Input (2 C**p - eps**p)**(1/p) - R_1 that leaves ``eps`` of asset 2.

    Evaluated as exp(log1p(2 u_C - u_eps) / p) - R_1 with u = x**p - 1,
    which stays accurate as p approaches 0.
    """
    _check_p(p)
    if not eps > 0.0:
        raise DomainError(f"eps must be > 0, got {eps!r}")
    v = 2.0 * power_shift(level, p) - power_shift(eps, p)
    if not v > -1.0:
        raise DomainError(
            f"2 C**p - eps**p must be > 0 (C={level!r}, eps={eps!r}, p={p!r})"
        )
    return power_unshift(v, p) - r1


def slippage_closed_p(p: float, level: float, r1: float, r2: float, eps: float) -> float:
    """(R_1/R_2)**(p-1) * delta_1(eps) / (R_2 - eps) - 1 for 0 < p <= 1."""
    _check_eps(eps, r2)
    d1 = delta1_of_eps(p, level, r1, eps)
    return (r1 / r2) ** (p - 1.0) * d1 / (r2 - eps) - 1.0


def slippage_closed_0(level: float, r1: float, r2: float, eps: float) -> float:
    """[(C**2/eps - R_1) / (R_2 - eps)] * (R_2/R_1) - 1 for the geometric pool."""
    _check_eps(eps, r2)
    return ((level * level / eps - r1) / (r2 - eps)) * (r2 / r1) - 1.0


def log_delta1_of_eps(p: float, level: float, eps: float) -> float:
    """log((2 C**p - eps**p)**(1/p)), finite even where the power overflows."""
    _check_p(p)
    v = 2.0 * power_shift(level, p) - power_shift(eps, p)
    if not v > -1.0:
        raise DomainError(f"2 C**p - eps**p must be > 0 (C={level!r}, eps={eps!r})")
    return math.log1p(v) / p


__all__: tuple[str, ...] = (
    "delta1_of_eps",
    "log_delta1_of_eps",
    "slippage_closed_0",
    "slippage_closed_p",
)
