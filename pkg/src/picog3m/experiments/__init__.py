"""Experiments: the eps scaling sweep with log-log slope fits, and the seeded property suite."""

from ._properties import PropertyResult, SuiteReport, bisect_output, run_property_suite
from ._scaling import (
    DEFAULT_C,
    DEFAULT_K_MAX,
    DEFAULT_K_MIN,
    DEFAULT_S,
    DEFAULT_TAIL,
    EpsGrid,
    ScalingConfig,
    ScalingReport,
    ScalingRow,
    fit_loglog_slope,
    run_scaling,
    scaling_row,
)

__all__: tuple[str, ...] = (
    # Scaling
    "DEFAULT_C",
    "DEFAULT_K_MAX",
    "DEFAULT_K_MIN",
    "DEFAULT_S",
    "DEFAULT_TAIL",
    "EpsGrid",
    "ScalingConfig",
    "ScalingReport",
    "ScalingRow",
    "fit_loglog_slope",
    "run_scaling",
    "scaling_row",
    # Properties
    "PropertyResult",
    "SuiteReport",
    "bisect_output",
    "run_property_suite",
)
