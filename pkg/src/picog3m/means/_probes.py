"""
Numerical probes for concavity, superadditivity and homogeneity of means.

Each probe returns a signed gap; the property holds when the gap is
nonnegative (concavity, superadditivity) or zero (homogeneity) up to
rounding.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from ..errors import DomainError
from ._means import generalized_mean, mean_dispatch
from ._spec import MeanSpec, Weights


def concavity_probe(
    spec: MeanSpec,
    w: Weights,
    x: Sequence[float],
    y: Sequence[float],
    t: float,
) -> float:
    """mu((1-t)x + t y) - [(1-t) mu(x) + t mu(y)] for t in [0, 1]."""
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must lie in [0, 1], got {t!r}")
    if len(x) != len(y):
        raise DomainError(f"dimension mismatch: {len(x)} vs {len(y)}")
    mid = [(1.0 - t) * xi + t * yi for xi, yi in zip(x, y)]
    chord = (1.0 - t) * mean_dispatch(x, w, spec) + t * mean_dispatch(y, w, spec)
    return mean_dispatch(mid, w, spec) - chord


def _unweighted(x: Sequence[float], p: float) -> float:
    # (sum x_i**p)**(1/p) = n**(1/p) * uniform-weight power mean
    n = len(x)
    return n ** (1.0 / p) * generalized_mean(x, Weights.uniform(n), p)


def superadditivity_gap(p: float, x: Sequence[float], y: Sequence[float]) -> float:
    """mu_p(x + y) - mu_p(x) - mu_p(y) for the unweighted power sum, 0 < p <= 1."""
    if not 0.0 < p <= 1.0:
        raise DomainError(f"superadditivity requires 0 < p <= 1, got {p!r}")
    if len(x) != len(y):
        raise DomainError(f"dimension mismatch: {len(x)} vs {len(y)}")
    total = [xi + yi for xi, yi in zip(x, y)]
    return _unweighted(total, p) - _unweighted(x, p) - _unweighted(y, p)


def homogeneity_gap(
    spec: MeanSpec, w: Weights, x: Sequence[float], t: float
) -> float:
    """mu(t x) - t mu(x) for t > 0."""
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"t must be finite and > 0, got {t!r}")
    scaled = [t * xi for xi in x]
    return mean_dispatch(scaled, w, spec) - t * mean_dispatch(x, w, spec)


__all__: tuple[str, ...] = (
    "concavity_probe",
    "homogeneity_gap",
    "superadditivity_gap",
)
