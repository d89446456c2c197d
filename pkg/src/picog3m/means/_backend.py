"""Kernel selection: compiled ``kernels`` when built, else ``_kernels``."""

try:
    from .kernels import SMALL_P, log_mean, power_mean, power_shift, power_unshift
except ImportError:
    from ._kernels import SMALL_P, log_mean, power_mean, power_shift, power_unshift

__all__: tuple[str, ...] = (
    "SMALL_P",
    "log_mean",
    "power_mean",
    "power_shift",
    "power_unshift",
)
