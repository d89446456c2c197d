"""
Pool state, trades and the constant-level rule.

Asset indices are 0-based throughout the library.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, replace

from ..errors import DomainError, InvalidTradeError
from ..means import MeanSpec, Weights, describe, f_mean, generator_of, is_pool_valid

logger = logging.getLogger(__name__)

DEFAULT_REL_TOL = 1e-9


def _pool_mean(x: Sequence[float], weights: Weights, spec: MeanSpec) -> float:
    # Same generator arithmetic as the solvers.
    return f_mean(x, weights, generator_of(spec))


@dataclass(frozen=True, slots=True)
class Pool:
    """Reserves, weights, mean spec and the cached level C.

    Build with :func:`new_pool`. Pools are immutable; :func:`execute_trade`
    returns a new pool carrying the same level.
    """

    reserves: tuple[float, ...]
    weights: Weights
    spec: MeanSpec
    level: float

    @property
    def n(self) -> int:
        return len(self.reserves)

    def recompute_level(self) -> float:
        """Mean of the current reserves (C itself is never recomputed)."""
        return _pool_mean(self.reserves, self.weights, self.spec)


@dataclass(frozen=True, slots=True)
class Trade:
    """Input amounts ``delta`` tendered and output amounts ``lam`` received."""

    delta: tuple[float, ...]
    lam: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.delta) != len(self.lam):
            raise DomainError(
                f"trade dimension mismatch: {len(self.delta)} inputs, {len(self.lam)} outputs"
            )
        for name, vec in (("input", self.delta), ("output", self.lam)):
            for i, v in enumerate(vec):
                if not math.isfinite(v) or v < 0.0:
                    raise DomainError(f"{name} {i} must be finite and >= 0, got {v!r}")

    @classmethod
    def of(cls, delta: Sequence[float], lam: Sequence[float]) -> Trade:
        return cls(tuple(float(v) for v in delta), tuple(float(v) for v in lam))

    @classmethod
    def zero(cls, n: int) -> Trade:
        return cls((0.0,) * n, (0.0,) * n)

    @classmethod
    def pair(cls, n: int, i: int, amount_in: float, j: int, amount_out: float) -> Trade:
        """Single-pair trade: ``amount_in`` of asset i for ``amount_out`` of asset j."""
        delta = [0.0] * n
        lam = [0.0] * n
        delta[i] = float(amount_in)
        lam[j] = float(amount_out)
        return cls(tuple(delta), tuple(lam))


@dataclass(frozen=True, slots=True)
class TradeQuote:
    """A solved trade with its post-trade state and pricing.

    ``spot_rate`` is the pre-trade rate for the traded pair. Both
    ``spot_rate`` and ``slippage`` are None when the quote has no single
    input/output pair (including the zero trade).
    """

    trade: Trade
    post_reserves: tuple[float, ...]
    invariant_residual: float
    spot_rate: float | None
    slippage: float | None


def new_pool(reserves: Sequence[float], weights: Weights, spec: MeanSpec) -> Pool:
    """
    Build a pool and cache its level C = mean(reserves).

    Args:
        reserves: Strictly positive reserves, one per weight.
        weights: Pool weights.
        spec: Pool-valid mean spec (0 < p <= 1, geometric or catalog f-mean).

    Returns:
        The pool.
    """
    if not is_pool_valid(spec):
        raise DomainError(f"{describe(spec)} is not pool-valid (requires 0 < p <= 1)")
    r = tuple(float(v) for v in reserves)
    if len(r) != len(weights):
        raise DomainError(f"dimension mismatch: {len(r)} reserves, {len(weights)} weights")
    for i, ri in enumerate(r):
        if not math.isfinite(ri) or ri <= 0.0:
            raise DomainError(f"reserve {i} must be finite and > 0, got {ri!r}")
    level = _pool_mean(r, weights, spec)
    logger.debug("new pool %s reserves=%r level=%r", describe(spec), r, level)
    return Pool(r, weights, spec, level)


def post_trade_reserves(pool: Pool, trade: Trade) -> tuple[float, ...]:
    if len(trade.delta) != pool.n:
        raise DomainError(f"trade has {len(trade.delta)} assets, pool has {pool.n}")
    return tuple(r + d - l for r, d, l in zip(pool.reserves, trade.delta, trade.lam))


def trading_value(pool: Pool, trade: Trade) -> float:
    """tau(R, delta, lam): the pool's mean evaluated at R + delta - lam."""
    post = post_trade_reserves(pool, trade)
    for i, v in enumerate(post):
        if v < 0.0:
            raise DomainError(f"post-trade reserve {i} is negative ({v!r})")
    return _pool_mean(post, pool.weights, pool.spec)


def invariant_residual(pool: Pool, trade: Trade) -> float:
    """tau(R, delta, lam) - C."""
    return trading_value(pool, trade) - pool.level


def is_valid_trade(pool: Pool, trade: Trade, rel_tol: float = DEFAULT_REL_TOL) -> bool:
    """True iff |tau(R, delta, lam) - C| <= rel_tol * C."""
    if not rel_tol > 0.0:
        raise DomainError(f"rel_tol must be > 0, got {rel_tol!r}")
    return abs(invariant_residual(pool, trade)) <= rel_tol * pool.level


def execute_trade(pool: Pool, trade: Trade, rel_tol: float = DEFAULT_REL_TOL) -> Pool:
    """
    Apply a valid trade.

    Args:
        pool: Pool to trade against.
        trade: Trade to apply.
        rel_tol: Relative tolerance of the constant-level rule.

    Returns:
        New pool with reserves R + delta - lam and the same level C.
    """
    post = post_trade_reserves(pool, trade)
    for i, v in enumerate(post):
        if v <= 0.0:
            raise InvalidTradeError(f"post-trade reserve {i} must stay > 0, got {v!r}")
    residual = invariant_residual(pool, trade)
    if abs(residual) > rel_tol * pool.level:
        raise InvalidTradeError(
            f"trade moves the level by {residual!r}, exceeds {rel_tol:g} * C={pool.level!r}"
        )
    logger.debug("executed trade delta=%r lam=%r -> %r", trade.delta, trade.lam, post)
    return replace(pool, reserves=post)


__all__: tuple[str, ...] = (
    "DEFAULT_REL_TOL",
    "Pool",
    "Trade",
    "TradeQuote",
    "execute_trade",
    "invariant_residual",
    "is_valid_trade",
    "new_pool",
    "post_trade_reserves",
    "trading_value",
)
