"""Engine: pools, the constant-level rule and exact swap solvers."""

from ._pool import (
    DEFAULT_REL_TOL,
    Pool,
    Trade,
    TradeQuote,
    execute_trade,
    invariant_residual,
    is_valid_trade,
    new_pool,
    post_trade_reserves,
    trading_value,
)
from ._solve import UNBOUNDED, max_buy_size, solve_input, solve_output

__all__: tuple[str, ...] = (
    "DEFAULT_REL_TOL",
    "UNBOUNDED",
    "Pool",
    "Trade",
    "TradeQuote",
    "execute_trade",
    "invariant_residual",
    "is_valid_trade",
    "max_buy_size",
    "new_pool",
    "post_trade_reserves",
    "solve_input",
    "solve_output",
    "trading_value",
)
