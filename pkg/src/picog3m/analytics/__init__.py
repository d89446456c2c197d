"""Analytics: spot rates, slippage, pair-trade closed forms and the exponent schedule."""

from ._closed_form import (
    delta1_of_eps,
    log_delta1_of_eps,
    slippage_closed_0,
    slippage_closed_p,
)
from ._rates import slippage, spot_rate, spot_rate_fd
from ._schedule import (
    ScheduleParams,
    exponent_c,
    scaled_trade_constant,
    schedule_p,
    theorem_identity_residual,
)

__all__: tuple[str, ...] = (
    # Rates
    "slippage",
    "spot_rate",
    "spot_rate_fd",
    # Closed forms
    "delta1_of_eps",
    "log_delta1_of_eps",
    "slippage_closed_0",
    "slippage_closed_p",
    # Schedule
    "ScheduleParams",
    "exponent_c",
    "scaled_trade_constant",
    "schedule_p",
    "theorem_identity_residual",
)
