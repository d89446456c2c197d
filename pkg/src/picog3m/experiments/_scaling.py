"""
Scaling experiment: slippage and trade size along the exponent schedule.

Reserves are instantiated as R_1 = R_2 = C, which keeps the pool level at C
for every p, so one reserve pair serves the whole eps sweep.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..analytics import (
    ScheduleParams,
    delta1_of_eps,
    exponent_c,
    schedule_p,
    slippage_closed_0,
    slippage_closed_p,
    theorem_identity_residual,
)
from ..errors import ConfigError, DomainError, ExperimentError

logger = logging.getLogger(__name__)

DEFAULT_C = 4.0
DEFAULT_S = 4.0 / 3.0
DEFAULT_K_MIN = 4
DEFAULT_K_MAX = 40
DEFAULT_TAIL = 0.5
MIN_GRID_POINTS = 8
IDENTITY_TOL = 1e-9
SLOPE_TOL = 0.05
S0_SLOPE_TOL = 0.02


@dataclass(frozen=True, slots=True)
class EpsGrid:
    """Geometric grid eps_k = base**(-k), k = linspace(start, stop, count).

    ``count`` defaults to stop - start + 1 (integer exponents).
    """

    start: float = DEFAULT_K_MIN
    stop: float = DEFAULT_K_MAX
    base: float = 2.0
    count: int | None = None

    def points(self) -> tuple[float, ...]:
        n = self.size
        ks = np.linspace(self.start, self.stop, n)
        return tuple(float(self.base ** -float(k)) for k in ks)

    @property
    def size(self) -> int:
        if self.count is not None:
            return self.count
        return int(round(self.stop - self.start)) + 1


@dataclass(frozen=True, slots=True)
class ScalingConfig:
    params: ScheduleParams
    grid: EpsGrid = field(default_factory=EpsGrid)
    tail_fraction: float = DEFAULT_TAIL
    workers: int = 1

    def __post_init__(self) -> None:
        if not 0.0 < self.tail_fraction <= 1.0:
            raise ConfigError(f"tail fraction must lie in (0, 1], got {self.tail_fraction!r}")
        if self.grid.size < MIN_GRID_POINTS:
            raise ConfigError(
                f"eps grid needs at least {MIN_GRID_POINTS} points, got {self.grid.size}"
            )
        if not self.grid.base > 1.0:
            raise ConfigError(f"grid base must be > 1, got {self.grid.base!r}")
        if not 0.0 < self.grid.start < self.grid.stop:
            raise ConfigError(
                f"grid exponents must satisfy 0 < start < stop, got "
                f"{self.grid.start!r}..{self.grid.stop!r}"
            )
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True, slots=True)
class ScalingRow:
    eps: float
    p: float
    delta1: float
    s_p: float
    s_0: float
    identity_residual: float


@dataclass(frozen=True, slots=True)
class ScalingReport:
    rows: tuple[ScalingRow, ...]
    slope_s: float
    slope_d: float
    slope_s0: float
    c_target: float

    def within_bands(
        self, slope_tol: float = SLOPE_TOL, s0_tol: float = S0_SLOPE_TOL
    ) -> bool:
        """True iff the fitted slopes match -c (within slope_tol) and -1 (within s0_tol)."""
        return (
            abs(self.slope_s + self.c_target) <= slope_tol
            and abs(self.slope_d + self.c_target) <= slope_tol
            and abs(self.slope_s0 + 1.0) <= s0_tol
        )


def fit_loglog_slope(points: Sequence[tuple[float, float]], tail_fraction: float) -> float:
    """
    Least-squares slope of log(value) against log(eps) over the smallest-eps tail.

    Args:
        points: (eps, value) pairs with eps > 0 and value > 0.
        tail_fraction: Share of the points, smallest eps first, used for the fit.

    Returns:
        The fitted exponent.
    """
    if not 0.0 < tail_fraction <= 1.0:
        raise DomainError(f"tail fraction must lie in (0, 1], got {tail_fraction!r}")
    ordered = sorted(points, key=lambda pt: pt[0])
    k = math.ceil(tail_fraction * len(ordered))
    if k < 2:
        raise DomainError(f"slope fit needs at least 2 tail points, got {k}")
    tail = ordered[:k]
    for eps, value in tail:
        if not (eps > 0.0 and value > 0.0):
            raise DomainError(f"slope fit needs positive eps and value, got ({eps!r}, {value!r})")
    log_eps = np.log(np.array([pt[0] for pt in tail], dtype=float))
    log_val = np.log(np.array([pt[1] for pt in tail], dtype=float))
    slope, _ = np.polyfit(log_eps, log_val, 1)
    return float(slope)


def scaling_row(params: ScheduleParams, eps: float) -> ScalingRow:
    """One sample of the sweep at ``eps``; raises ExperimentError on a broken invariant."""
    c = params.level
    p = schedule_p(params, eps)
    if not 0.0 < p <= 1.0:
        raise ExperimentError(f"schedule left (0, 1]: p={p!r}", eps)
    d1 = delta1_of_eps(p, c, c, eps)
    if not d1 > 0.0:
        raise ExperimentError(f"trade size must be > 0, got {d1!r}", eps)
    residual = theorem_identity_residual(params, eps)
    if not abs(residual) <= IDENTITY_TOL:
        raise ExperimentError(f"identity residual {residual!r} exceeds {IDENTITY_TOL:g}", eps)
    return ScalingRow(
        eps=eps,
        p=p,
        delta1=d1,
        s_p=slippage_closed_p(p, c, c, c, eps),
        s_0=slippage_closed_0(c, c, c, eps),
        identity_residual=residual,
    )


def run_scaling(config: ScalingConfig) -> ScalingReport:
    """
    Sweep the eps grid and fit the three scaling exponents.

    Args:
        config: Schedule parameters, grid, tail window and worker count.

    Returns:
        Report with rows in grid order and slopes of |S_p|, delta_1 and |S_0|.
    """
    grid = config.grid.points()
    for a, b in zip(grid, grid[1:]):
        if not b < a:
            raise ConfigError(f"eps grid must be strictly decreasing, got {a!r} then {b!r}")
    if not (0.0 < grid[-1] and grid[0] < 1.0):
        raise ConfigError(f"eps grid must lie in (0, 1), got {grid[0]!r}..{grid[-1]!r}")

    def row(eps: float) -> ScalingRow:
        return scaling_row(config.params, eps)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            rows = tuple(pool.map(row, grid))
    else:
        rows = tuple(row(eps) for eps in grid)
    for prev, cur in zip(rows, rows[1:]):
        if not cur.delta1 > prev.delta1:
            raise ExperimentError(
                f"trade size must grow as eps shrinks, got {prev.delta1!r} then {cur.delta1!r}",
                cur.eps,
            )

    tail = config.tail_fraction
    report = ScalingReport(
        rows=rows,
        slope_s=fit_loglog_slope([(r.eps, abs(r.s_p)) for r in rows], tail),
        slope_d=fit_loglog_slope([(r.eps, r.delta1) for r in rows], tail),
        slope_s0=fit_loglog_slope([(r.eps, abs(r.s_0)) for r in rows], tail),
        c_target=exponent_c(config.params.s),
    )
    logger.info(
        "scaling C=%r s=%r rows=%d slopes S_p=%.6f delta1=%.6f S_0=%.6f target=-%.6f",
        config.params.level,
        config.params.s,
        len(rows),
        report.slope_s,
        report.slope_d,
        report.slope_s0,
        report.c_target,
    )
    return report


__all__: tuple[str, ...] = (
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
)
