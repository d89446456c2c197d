"""Means: generalized (power), geometric and generalized f-means, plus property probes."""

from ._backend import SMALL_P, log_mean, power_mean, power_shift, power_unshift
from ._means import f_mean, generalized_mean, geometric_mean, mean_dispatch
from ._probes import concavity_probe, homogeneity_gap, superadditivity_gap
from ._spec import (
    WEIGHT_SUM_TOL,
    FKind,
    FMean,
    Geometric,
    LogF,
    MeanSpec,
    Power,
    PowerF,
    Weights,
    describe,
    generator_of,
    is_pool_valid,
)

__all__: tuple[str, ...] = (
    # Types
    "FKind",
    "FMean",
    "Geometric",
    "LogF",
    "MeanSpec",
    "Power",
    "PowerF",
    "WEIGHT_SUM_TOL",
    "Weights",
    "describe",
    "generator_of",
    "is_pool_valid",
    # Means
    "f_mean",
    "generalized_mean",
    "geometric_mean",
    "mean_dispatch",
    # Probes
    "concavity_probe",
    "homogeneity_gap",
    "superadditivity_gap",
    # Kernels
    "SMALL_P",
    "log_mean",
    "power_mean",
    "power_shift",
    "power_unshift",
)
