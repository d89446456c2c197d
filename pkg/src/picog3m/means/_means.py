"""
Generalized means, geometric means and generalized f-means.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from ..errors import DomainError
from ._backend import log_mean, power_mean
from ._spec import FKind, FMean, Geometric, MeanSpec, Power, Weights


def _as_vector(x: Sequence[float], w: Weights) -> tuple[float, ...]:
    v = tuple(float(xi) for xi in x)
    if len(v) != len(w):
        raise DomainError(f"dimension mismatch: {len(v)} values, {len(w)} weights")
    for i, xi in enumerate(v):
        if not math.isfinite(xi):
            raise DomainError(f"value {i} must be finite, got {xi!r}")
        if xi < 0.0:
            raise DomainError(f"value {i} must be >= 0, got {xi!r}")
    return v


def generalized_mean(x: Sequence[float], w: Weights, p: float) -> float:
    """
    Weighted power mean (sum w_i x_i**p)**(1/p).

    For |p| < 1e-3 the mean is evaluated in the log domain as
    exp(log1p(sum w_i expm1(p log x_i)) / p).

    Args:
        x: Nonnegative values, one per weight.
        w: Weights.
        p: Exponent, p != 0. Negative p requires x_i > 0 wherever w_i > 0.

    Returns:
        The mean; lies between min and max of x over positive weights.
    """
    v = _as_vector(x, w)
    if not math.isfinite(p) or p == 0.0:
        raise DomainError(f"generalized mean requires finite p != 0, got {p!r}")
    if p < 0.0:
        for i, (xi, wi) in enumerate(zip(v, w.values)):
            if wi > 0.0 and xi == 0.0:
                raise DomainError(f"value {i} is 0, not allowed with p={p!r} < 0")
    return power_mean(v, w.values, p)


def geometric_mean(x: Sequence[float], w: Weights) -> float:
    """
    Weighted geometric mean prod x_i**w_i, evaluated as exp(sum w_i log x_i).

    Args:
        x: Values, strictly positive wherever the weight is positive.
        w: Weights.

    Returns:
        The geometric mean.
    """
    v = _as_vector(x, w)
    for i, (xi, wi) in enumerate(zip(v, w.values)):
        if wi > 0.0 and xi == 0.0:
            raise DomainError(f"value {i} is 0 with positive weight {wi!r}")
    return log_mean(v, w.values)


def f_mean(x: Sequence[float], w: Weights, f: FKind) -> float:
    """
    Generalized f-mean f^-1(sum w_i f(x_i)).

    Args:
        x: Values inside the domain of ``f`` wherever the weight is positive.
        w: Weights.
        f: Catalog generator (``PowerF`` or ``LogF``).

    Returns:
        The f-mean.
    """
    v = _as_vector(x, w)
    for i, (xi, wi) in enumerate(zip(v, w.values)):
        if wi > 0.0 and not f.in_domain(xi):
            raise DomainError(f"value {i}={xi!r} is outside the domain of {f!r}")
    acc = 0.0
    for xi, wi in zip(v, w.values):
        if wi != 0.0:
            acc += wi * f.f(xi)
    return f.f_inv(acc)


def mean_dispatch(x: Sequence[float], w: Weights, spec: MeanSpec) -> float:
    """Evaluate the mean named by ``spec``."""
    match spec:
        case Power(p=p):
            return generalized_mean(x, w, p)
        case Geometric():
            return geometric_mean(x, w)
        case FMean(f=f):
            return f_mean(x, w, f)
    raise TypeError(f"unsupported mean spec {spec!r}")


__all__: tuple[str, ...] = (
    "f_mean",
    "generalized_mean",
    "geometric_mean",
    "mean_dispatch",
)
