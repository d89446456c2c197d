"""
Generalized-mean market makers: power and f-mean pools, exact swap solvers,
slippage analytics and the exponent-schedule scaling experiment.
"""

import logging

from .__about__ import __version__
from .analytics import (
    ScheduleParams,
    delta1_of_eps,
    exponent_c,
    log_delta1_of_eps,
    scaled_trade_constant,
    schedule_p,
    slippage,
    slippage_closed_0,
    slippage_closed_p,
    spot_rate,
    spot_rate_fd,
    theorem_identity_residual,
)
from .engine import (
    UNBOUNDED,
    Pool,
    Trade,
    TradeQuote,
    execute_trade,
    invariant_residual,
    is_valid_trade,
    max_buy_size,
    new_pool,
    post_trade_reserves,
    solve_input,
    solve_output,
    trading_value,
)
from .errors import (
    ConfigError,
    DomainError,
    ExperimentError,
    G3MError,
    InfeasibleTradeError,
    InvalidTradeError,
)
from .experiments import (
    EpsGrid,
    ScalingConfig,
    ScalingReport,
    ScalingRow,
    SuiteReport,
    fit_loglog_slope,
    run_property_suite,
    run_scaling,
)
from .means import (
    FMean,
    Geometric,
    LogF,
    MeanSpec,
    Power,
    PowerF,
    Weights,
    concavity_probe,
    f_mean,
    generalized_mean,
    geometric_mean,
    homogeneity_gap,
    mean_dispatch,
    superadditivity_gap,
)

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__: tuple[str, ...] = (
    # About
    "__version__",
    # Errors
    "ConfigError",
    "DomainError",
    "ExperimentError",
    "G3MError",
    "InfeasibleTradeError",
    "InvalidTradeError",
    # Means: specs
    "FMean",
    "Geometric",
    "LogF",
    "MeanSpec",
    "Power",
    "PowerF",
    "Weights",
    # Means: evaluation and probes
    "concavity_probe",
    "f_mean",
    "generalized_mean",
    "geometric_mean",
    "homogeneity_gap",
    "mean_dispatch",
    "superadditivity_gap",
    # Engine
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
    # Analytics: rates and closed forms
    "delta1_of_eps",
    "log_delta1_of_eps",
    "slippage",
    "slippage_closed_0",
    "slippage_closed_p",
    "spot_rate",
    "spot_rate_fd",
    # Analytics: schedule
    "ScheduleParams",
    "exponent_c",
    "scaled_trade_constant",
    "schedule_p",
    "theorem_identity_residual",
    # Experiments
    "EpsGrid",
    "ScalingConfig",
    "ScalingReport",
    "ScalingRow",
    "SuiteReport",
    "fit_loglog_slope",
    "run_property_suite",
    "run_scaling",
)
