"""
Scalar kernels for power and log means. Pure Python.

Inputs are assumed validated (finite, in domain, weights normalized).
"""

from __future__ import annotations

import math
from collections.abc import Sequence

# Below this |p| the power mean is evaluated in the log domain.
SMALL_P = 1e-3

# Largest |log| of a rescaling factor applied directly; beyond it exp(log m + ...).
_EXP_RANGE = 700.0


def power_shift(x: float, p: float) -> float:
    """x**p - 1 without cancellation; -1 at x = 0."""
    if x == 0.0:
        return -1.0
    return math.expm1(p * math.log(x))


def power_unshift(v: float, p: float) -> float:
    """(1 + v)**(1/p) without cancellation; 0 at v = -1."""
    if v == -1.0:
        return 0.0
    return math.exp(math.log1p(v) / p)


def power_mean(x: Sequence[float], w: Sequence[float], p: float) -> float:
    """Weighted power mean over the entries with nonzero weight.

    Away from p = 0 and p = 1 the values are divided by a pivot m (the max
    for p > 0, the min for p < 0), so every term (x_i/m)**p lies in [0, 1]
    and the sum lies in [w_m, 1].
    """
    if abs(p) < SMALL_P:
        acc = 0.0
        for xi, wi in zip(x, w):
            if wi != 0.0:
                acc += wi * power_shift(xi, p)
        if acc <= -1.0:
            return 0.0
        return power_unshift(acc, p)
    if p == 1.0:
        acc = 0.0
        for xi, wi in zip(x, w):
            if wi != 0.0:
                acc += wi * xi
        return acc
    m = 0.0 if p > 0.0 else math.inf
    for xi, wi in zip(x, w):
        if wi != 0.0:
            m = max(m, xi) if p > 0.0 else min(m, xi)
    if m == 0.0:
        return 0.0
    acc = 0.0
    for xi, wi in zip(x, w):
        if wi != 0.0:
            acc += wi * (xi / m) ** p
    lg = math.log(acc) / p
    if -_EXP_RANGE < lg < _EXP_RANGE:
        return m * acc ** (1.0 / p)
    return math.exp(math.log(m) + lg)


def log_mean(x: Sequence[float], w: Sequence[float]) -> float:
    acc = 0.0
    for xi, wi in zip(x, w):
        if wi != 0.0:
            acc += wi * math.log(xi)
    return math.exp(acc)


__all__: tuple[str, ...] = (
    "SMALL_P",
    "log_mean",
    "power_mean",
    "power_shift",
    "power_unshift",
)
