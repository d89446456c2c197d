"""
Exact swap solvers.

Every pool-valid spec is an f-mean for a catalog generator f (power specs
use f(x) = (x**p - 1)/p, geometric uses log), so one inversion serves all
of them: the unknown reserve x_k solves

    w_k f(x_k) = f(C) - sum_{m != k} w_m f(x_m).

The constant-sum case (p = 1) is linear and is solved on increments instead,
which keeps its quotes exact.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

from ..analytics._rates import slippage, spot_rate
from ..errors import DomainError, InfeasibleTradeError
from ..means import PowerF, describe, generator_of
from ._pool import (
    DEFAULT_REL_TOL,
    Pool,
    Trade,
    TradeQuote,
    invariant_residual,
    post_trade_reserves,
)

logger = logging.getLogger(__name__)

UNBOUNDED = math.inf

# Rounding noise tolerated below zero before an amount counts as negative.
_CLAMP_REL = 1e-12


def _is_linear(pool: Pool) -> bool:
    g = generator_of(pool.spec)
    return isinstance(g, PowerF) and g.p == 1.0


def _check_index(pool: Pool, k: int) -> None:
    if not 0 <= k < pool.n:
        raise DomainError(f"asset index {k} out of range for {pool.n} assets")
    if pool.weights[k] == 0.0:
        raise DomainError(f"asset {k} has zero weight")


def _solve_reserve(pool: Pool, x: Sequence[float], k: int) -> float:
    """Reserve of asset k restoring the level, all other reserves at ``x``."""
    g = generator_of(pool.spec)
    w = pool.weights
    acc = 0.0
    for m, (xm, wm) in enumerate(zip(x, w.values)):
        if m != k and wm != 0.0:
            acc += wm * g.f(xm)
    arg = (g.f(pool.level) - acc) / w[k]
    try:
        return g.f_inv(arg)
    except (DomainError, OverflowError):
        raise InfeasibleTradeError(
            f"no reserve of asset {k} restores level C={pool.level!r} "
            f"for {describe(pool.spec)} (inverse argument {arg!r} out of range)"
        ) from None


def _clamp(amount: float, scale: float, what: str) -> float:
    if amount < 0.0:
        if amount >= -_CLAMP_REL * scale:
            return 0.0
        raise InfeasibleTradeError(f"{what} would be negative ({amount!r})")
    return amount


def _single(vec: Sequence[float]) -> int | None:
    nz = [k for k, v in enumerate(vec) if v != 0.0]
    return nz[0] if len(nz) == 1 else None


def _quote(pool: Pool, trade: Trade) -> TradeQuote:
    residual = invariant_residual(pool, trade)
    if abs(residual) > DEFAULT_REL_TOL * pool.level:
        raise InfeasibleTradeError(
            f"solved trade misses level C={pool.level!r} by {residual!r}; "
            "amounts are beyond the solver's precision"
        )
    i, j = _single(trade.delta), _single(trade.lam)
    rate = slip = None
    if i is not None and j is not None and i != j:
        rate = spot_rate(pool, i, j)
        slip = slippage(pool, trade.delta[i], trade.lam[j], i, j)
    return TradeQuote(
        trade=trade,
        post_reserves=post_trade_reserves(pool, trade),
        invariant_residual=residual,
        spot_rate=rate,
        slippage=slip,
    )


def solve_output(pool: Pool, delta: Sequence[float], j: int) -> TradeQuote:
    """
    Output of asset j that keeps the level for the given inputs.

    Args:
        pool: Pool to quote against.
        delta: Input amounts per asset (>= 0, zero at j).
        j: Output asset index.

    Returns:
        Quote whose trade pays out only asset j.
    """
    d = tuple(float(v) for v in delta)
    if len(d) != pool.n:
        raise DomainError(f"input has {len(d)} assets, pool has {pool.n}")
    _check_index(pool, j)
    if d[j] != 0.0:
        raise DomainError(f"input on the output asset {j} must be 0, got {d[j]!r}")
    for k, v in enumerate(d):
        if not math.isfinite(v) or v < 0.0:
            raise DomainError(f"input {k} must be finite and >= 0, got {v!r}")
    r_j = pool.reserves[j]
    if not any(d):
        lam_j = 0.0
    elif _is_linear(pool):
        w = pool.weights
        lam_j = math.fsum(w[m] * d[m] for m in range(pool.n) if m != j) / w[j]
    else:
        x = [r + dv for r, dv in zip(pool.reserves, d)]
        lam_j = r_j - _solve_reserve(pool, x, j)
    lam_j = _clamp(lam_j, r_j, f"output of asset {j}")
    if lam_j >= r_j:
        raise InfeasibleTradeError(
            f"input {d!r} exceeds the liquidity of {describe(pool.spec)}: "
            f"output {lam_j!r} would drain reserve {j} ({r_j!r})"
        )
    lam = [0.0] * pool.n
    lam[j] = lam_j
    logger.debug("solve_output delta=%r j=%d -> %r", d, j, lam_j)
    return _quote(pool, Trade(d, tuple(lam)))


def solve_input(pool: Pool, lam: Sequence[float], i: int) -> TradeQuote:
    """
    Input of asset i that keeps the level for the given outputs.

    Args:
        pool: Pool to quote against.
        lam: Output amounts per asset (0 <= lam_k < R_k, zero at i).
        i: Input asset index.

    Returns:
        Quote whose trade tenders only asset i.
    """
    out = tuple(float(v) for v in lam)
    if len(out) != pool.n:
        raise DomainError(f"output has {len(out)} assets, pool has {pool.n}")
    _check_index(pool, i)
    if out[i] != 0.0:
        raise DomainError(f"output on the input asset {i} must be 0, got {out[i]!r}")
    for k, (v, r) in enumerate(zip(out, pool.reserves)):
        if not math.isfinite(v) or v < 0.0:
            raise DomainError(f"output {k} must be finite and >= 0, got {v!r}")
        if v >= r:
            raise DomainError(f"output {k} must stay below reserve {r!r}, got {v!r}")
    r_i = pool.reserves[i]
    if not any(out):
        delta_i = 0.0
    elif _is_linear(pool):
        w = pool.weights
        delta_i = math.fsum(w[m] * out[m] for m in range(pool.n) if m != i) / w[i]
    else:
        x = [r - v for r, v in zip(pool.reserves, out)]
        delta_i = _solve_reserve(pool, x, i) - r_i
    delta_i = _clamp(delta_i, r_i, f"input of asset {i}")
    if not math.isfinite(delta_i):
        raise InfeasibleTradeError(f"input of asset {i} overflows for outputs {out!r}")
    delta = [0.0] * pool.n
    delta[i] = delta_i
    logger.debug("solve_input lam=%r i=%d -> %r", out, i, delta_i)
    return _quote(pool, Trade(tuple(delta), out))


def max_buy_size(pool: Pool, i: int, j: int) -> float:
    """
    Supremum of the input of asset i as the output of asset j drains R_j.

    Args:
        pool: Pool to quote against.
        i: Input asset index.
        j: Output asset index, != i.

    Returns:
        The bound, or ``UNBOUNDED`` (inf) for geometric/log pools.
    """
    _check_index(pool, i)
    _check_index(pool, j)
    if i == j:
        raise DomainError(f"input and output asset must differ, got {i}")
    g = generator_of(pool.spec)
    if not isinstance(g, PowerF):
        return UNBOUNDED
    if g.p == 1.0:
        return pool.weights[j] * pool.reserves[j] / pool.weights[i]
    x = list(pool.reserves)
    x[j] = 0.0
    return _solve_reserve(pool, x, i) - pool.reserves[i]


__all__: tuple[str, ...] = (
    "UNBOUNDED",
    "max_buy_size",
    "solve_input",
    "solve_output",
)
