"""
Spot exchange rates and slippage.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from ..errors import DomainError
from ..means import generator_of, mean_dispatch

if TYPE_CHECKING:
    from ..engine import Pool


def _check_pair(pool: Pool, i: int, j: int) -> None:
    for k in (i, j):
        if not 0 <= k < pool.n:
            raise DomainError(f"asset index {k} out of range for {pool.n} assets")
    if i == j:
        raise DomainError(f"input and output asset must differ, got {i}")
    for k in (i, j):
        if pool.weights[k] == 0.0:
            raise DomainError(f"asset {k} has zero weight")


def spot_rate(pool: Pool, i: int, j: int) -> float:
    """
    Spot rate of asset j in units of asset i: (dtau/dR_j) / (dtau/dR_i).

    The partials of f^-1(sum w_k f(R_k)) share the factor (f^-1)', so the
    rate is w_j f'(R_j) / (w_i f'(R_i)).

    Args:
        pool: Pool at its current reserves.
        i: Input asset index.
        j: Output asset index.

    Returns:
        The spot rate, > 0.
    """
    _check_pair(pool, i, j)
    g = generator_of(pool.spec)
    r = pool.reserves
    return (pool.weights[j] * g.f_prime(r[j])) / (pool.weights[i] * g.f_prime(r[i]))


def spot_rate_fd(pool: Pool, i: int, j: int, h_rel: float = 1e-6) -> float:
    """Central finite-difference estimate of :func:`spot_rate`."""
    _check_pair(pool, i, j)

    def partial(k: int) -> float:
        h = h_rel * pool.reserves[k]
        up = list(pool.reserves)
        down = list(pool.reserves)
        up[k] += h
        down[k] -= h
        return (
            mean_dispatch(up, pool.weights, pool.spec)
            - mean_dispatch(down, pool.weights, pool.spec)
        ) / (2.0 * h)

    return partial(j) / partial(i)


def slippage(pool: Pool, amount_in: float, amount_out: float, i: int, j: int) -> float:
    """
    Slippage (amount_in / amount_out) / spot_rate - 1 of a pair trade.

    Args:
        pool: Pool before the trade.
        amount_in: Input amount of asset i.
        amount_out: Output amount of asset j, > 0.
        i: Input asset index.
        j: Output asset index.

    Returns:
        Signed slippage; positive when the trade pays more than the spot rate.
    """
    if not amount_out > 0.0:
        raise DomainError(f"slippage needs a positive output amount, got {amount_out!r}")
    rate = spot_rate(pool, i, j)
    if rate == 0.0 or not math.isfinite(rate):
        raise DomainError(f"spot rate must be finite and nonzero, got {rate!r}")
    return (amount_in / amount_out) / rate - 1.0


__all__: tuple[str, ...] = (
    "slippage",
    "spot_rate",
    "spot_rate_fd",
)
