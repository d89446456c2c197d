"""
Pool configuration documents.

A document is a JSON object::

    {
      "reserves": [4, 4],
      "weights": [0.5, 0.5],
      "mean": {"type": "power", "p": 0.5}
    }

``mean`` is one of ``{"type": "power", "p": ...}``, ``{"type": "geometric"}``,
``{"type": "fmean", "f": "power", "fp": ...}`` or ``{"type": "fmean", "f": "log"}``.
Numbers are read as decimals and converted once to float.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path
from typing import Any

from ..engine import Pool, new_pool
from ..errors import ConfigError, DomainError
from ..means import FMean, Geometric, LogF, MeanSpec, Power, PowerF, Weights


@dataclass(frozen=True, slots=True)
class PoolConfigDoc:
    reserves: tuple[float, ...]
    weights: tuple[float, ...]
    spec: MeanSpec

    def to_pool(self) -> Pool:
        try:
            return new_pool(self.reserves, Weights.of(self.weights), self.spec)
        except DomainError as exc:
            raise ConfigError(f"invalid pool: {exc}") from exc


def _number(value: Any, where: str) -> float:
    # bool is an int subclass
    if isinstance(value, bool) or not isinstance(value, (int, Decimal, float)):
        raise ConfigError(f"{where} must be a number, got {value!r}")
    out = float(value)
    if not math.isfinite(out):
        raise ConfigError(f"{where} must be finite, got {value!r}")
    return out


def _numbers(value: Any, where: str) -> tuple[float, ...]:
    if not isinstance(value, list):
        raise ConfigError(f"{where} must be a list of numbers, got {value!r}")
    return tuple(_number(v, f"{where}[{k}]") for k, v in enumerate(value))


def _spec(mean: Any) -> MeanSpec:
    if not isinstance(mean, dict):
        raise ConfigError(f"mean must be an object, got {mean!r}")
    kind = mean.get("type")
    try:
        match kind:
            case "power":
                return Power(_number(mean.get("p"), "mean.p"))
            case "geometric":
                return Geometric()
            case "fmean":
                match mean.get("f"):
                    case "power":
                        return FMean(PowerF(_number(mean.get("fp"), "mean.fp")))
                    case "log":
                        return FMean(LogF())
                    case other:
                        raise ConfigError(f'mean.f must be "power" or "log", got {other!r}')
    except DomainError as exc:
        raise ConfigError(f"invalid mean: {exc}") from exc
    raise ConfigError(f'mean.type must be "power", "geometric" or "fmean", got {kind!r}')


def parse_pool_config(text: str) -> PoolConfigDoc:
    """Parse and validate a document; the pool itself is built by :meth:`PoolConfigDoc.to_pool`."""
    try:
        raw = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"pool config is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"pool config must be a JSON object, got {type(raw).__name__}")
    missing = [key for key in ("reserves", "weights", "mean") if key not in raw]
    if missing:
        raise ConfigError(f"pool config is missing {', '.join(missing)}")
    return PoolConfigDoc(
        reserves=_numbers(raw["reserves"], "reserves"),
        weights=_numbers(raw["weights"], "weights"),
        spec=_spec(raw["mean"]),
    )


def load_pool_config(path: str | Path) -> Pool:
    """Read a document from ``path`` and build its pool."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parse_pool_config(text).to_pool()
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def _mean_doc(spec: MeanSpec) -> dict[str, Any]:
    match spec:
        case Power(p=p):
            return {"type": "power", "p": p}
        case Geometric():
            return {"type": "geometric"}
        case FMean(f=PowerF(p=p)):
            return {"type": "fmean", "f": "power", "fp": p}
        case FMean(f=LogF()):
            return {"type": "fmean", "f": "log"}
    raise ConfigError(f"unsupported mean spec {spec!r}")


def dump_pool_config(pool: Pool) -> str:
    """Serialize a pool; floats are written with repr, so they read back exactly."""
    doc = {
        "reserves": list(pool.reserves),
        "weights": list(pool.weights.values),
        "mean": _mean_doc(pool.spec),
    }
    return json.dumps(doc, indent=2) + "\n"


__all__: tuple[str, ...] = (
    "PoolConfigDoc",
    "dump_pool_config",
    "load_pool_config",
    "parse_pool_config",
)
