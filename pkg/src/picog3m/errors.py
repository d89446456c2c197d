"""Exceptions raised by picog3m."""

from __future__ import annotations


class G3MError(Exception):
    """Base class for every error raised by picog3m."""


class DomainError(G3MError, ValueError):
    """Input outside a function's domain (sign, finiteness, dimensions)."""


class InfeasibleTradeError(G3MError):
    """No trade of the requested shape keeps the pool at its level."""


class InvalidTradeError(G3MError):
    """Trade rejected by the constant-level rule."""


class ConfigError(G3MError, ValueError):
    """Bad configuration document, flag or parameter constraint."""


class ExperimentError(G3MError):
    """A scaling row violated its invariants."""

    def __init__(self, message: str, eps: float) -> None:
        super().__init__(f"{message} (eps={eps!r})")
        self.eps = eps


__all__: tuple[str, ...] = (
    "ConfigError",
    "DomainError",
    "ExperimentError",
    "G3MError",
    "InfeasibleTradeError",
    "InvalidTradeError",
)
