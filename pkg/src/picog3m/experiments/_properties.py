"""
Seeded property suite for means, pools and the exponent schedule.

Every property draws its cases from one ``numpy.random.Generator`` seeded by
the caller, stops at its first counterexample and reports how many cases
passed. The suite is what the ``verify`` command runs.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from ..analytics import (
    ScheduleParams,
    exponent_c,
    log_delta1_of_eps,
    scaled_trade_constant,
    schedule_p,
    slippage,
    spot_rate,
    spot_rate_fd,
    theorem_identity_residual,
)
from ..engine import (
    Pool,
    Trade,
    execute_trade,
    max_buy_size,
    new_pool,
    solve_input,
    solve_output,
    trading_value,
)
from ..errors import G3MError, InfeasibleTradeError
from ..means import (
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
from ._scaling import DEFAULT_C, DEFAULT_K_MAX, DEFAULT_K_MIN, DEFAULT_S, EpsGrid

logger = logging.getLogger(__name__)

MEAN_TOL = 1e-12
ENGINE_TOL = 1e-9
DRIFT_TOL = 1e-8
FD_TOL = 1e-6
KEY_FACT_TOL = 1e-4
BOUND_TOL = 1e-12
PROBE_PS = (0.1, 0.3, 0.5, 0.9, 1.0)
KEY_FACT_PS = (1e-2, 1e-3, 1e-4, 1e-6)
# Expensive engine properties run at most this many cases.
ENGINE_CASES = 1000
TRADE_SEQUENCE = 100

Case = tuple
Check = Callable[[Case], str | None]
Draw = Callable[[np.random.Generator], Case]


@dataclass(frozen=True, slots=True)
class PropertyResult:
    name: str
    cases: int
    passed: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True, slots=True)
class SuiteReport:
    seed: int
    results: tuple[PropertyResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def first_failure(self) -> PropertyResult | None:
        return next((r for r in self.results if not r.ok), None)


# --- draws ---


def _vector(rng: np.random.Generator, n: int, lo: float = 0.1, hi: float = 10.0) -> list[float]:
    return np.exp(rng.uniform(math.log(lo), math.log(hi), n)).tolist()


def _weights(rng: np.random.Generator, n: int) -> Weights:
    return Weights.of(rng.dirichlet(np.full(n, 4.0)).tolist())


def _n(rng: np.random.Generator) -> int:
    return int(rng.integers(2, 6))


def _pool_spec(rng: np.random.Generator) -> MeanSpec:
    p = float(rng.uniform(0.05, 1.0))
    match int(rng.integers(0, 4)):
        case 0:
            return Power(p)
        case 1:
            return Geometric()
        case 2:
            return FMean(PowerF(p))
    return FMean(LogF())


def _any_spec(rng: np.random.Generator) -> MeanSpec:
    if rng.random() < 0.5:
        return _pool_spec(rng)
    p = float(rng.uniform(-3.0, 3.0))
    return Power(p) if p != 0.0 else Geometric()


def _random_pool(rng: np.random.Generator, lo: float = 0.5, hi: float = 50.0) -> Pool:
    n = _n(rng)
    return new_pool(_vector(rng, n, lo, hi), _weights(rng, n), _pool_spec(rng))


def _pair(rng: np.random.Generator, n: int) -> tuple[int, int]:
    i, j = rng.choice(n, size=2, replace=False).tolist()
    return int(i), int(j)


def _input_size(
    rng: np.random.Generator, pool: Pool, i: int, j: int, lo: float = 0.01, hi: float = 1.0
) -> float:
    """An input of asset i well inside the pool's liquidity."""
    size = float(rng.uniform(lo, hi)) * pool.reserves[i]
    cap = max_buy_size(pool, i, j)
    return min(size, 0.5 * cap) if math.isfinite(cap) else size


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# --- runner ---


def _run(name: str, cases: int, rng: np.random.Generator, draw: Draw, check: Check) -> PropertyResult:
    passed = 0
    for _ in range(cases):
        case = draw(rng)
        try:
            failure = check(case)
        except G3MError as exc:
            failure = f"{type(exc).__name__}: {exc}"
        if failure is not None:
            return PropertyResult(name, cases, passed, f"{failure} | case={case!r}")
        passed += 1
    return PropertyResult(name, cases, passed)


# --- means ---


def _idempotence(rng: np.random.Generator) -> Case:
    n = _n(rng)
    c = [1e-6, 1.0, 1e6][int(rng.integers(0, 3))]
    return (_any_spec(rng), _weights(rng, n), c)


def _check_idempotence(case: Case) -> str | None:
    spec, w, c = case
    got = mean_dispatch([c] * len(w), w, spec)
    return None if _rel(got, c) <= MEAN_TOL else f"mean of constant {c!r} is {got!r}"


def _bounds(rng: np.random.Generator) -> Case:
    n = _n(rng)
    return (_any_spec(rng), _weights(rng, n), _vector(rng, n))


def _check_bounds(case: Case) -> str | None:
    spec, w, x = case
    got = mean_dispatch(x, w, spec)
    lo, hi = min(x), max(x)
    if lo * (1.0 - MEAN_TOL) <= got <= hi * (1.0 + MEAN_TOL):
        return None
    return f"mean {got!r} outside [{lo!r}, {hi!r}]"


def _monotone(rng: np.random.Generator) -> Case:
    n = _n(rng)
    k = int(rng.integers(0, n))
    return (_any_spec(rng), _weights(rng, n), _vector(rng, n), k, float(rng.uniform(0.0, 1.0)))


def _check_monotone(case: Case) -> str | None:
    spec, w, x, k, bump = case
    y = list(x)
    y[k] *= 1.0 + bump
    a, b = mean_dispatch(x, w, spec), mean_dispatch(y, w, spec)
    return None if b >= a - MEAN_TOL * a else f"raising x[{k}] lowered the mean {a!r} -> {b!r}"


def _ordering(rng: np.random.Generator) -> Case:
    n = _n(rng)
    p, q = sorted(rng.uniform(-3.0, 3.0, 2).tolist())
    return (_weights(rng, n), _vector(rng, n), p, q)


def _power_or_geometric(x: Sequence[float], w: Weights, p: float) -> float:
    return geometric_mean(x, w) if p == 0.0 else generalized_mean(x, w, p)


def _check_ordering(case: Case) -> str | None:
    w, x, p, q = case
    a, b = _power_or_geometric(x, w, p), _power_or_geometric(x, w, q)
    return None if a <= b + MEAN_TOL * max(a, b) else f"mu_{p!r}={a!r} > mu_{q!r}={b!r}"


def _key_fact(rng: np.random.Generator) -> Case:
    n = [2, 5][int(rng.integers(0, 2))]
    return (_weights(rng, n), _vector(rng, n))


def _check_key_fact(case: Case) -> str | None:
    w, x = case
    g = geometric_mean(x, w)
    gaps = [abs(generalized_mean(x, w, p) - g) / g for p in KEY_FACT_PS]
    if gaps[-1] > KEY_FACT_TOL:
        return f"gap {gaps[-1]!r} at p={KEY_FACT_PS[-1]!r}"
    for (pa, ga), (pb, gb) in zip(zip(KEY_FACT_PS, gaps), zip(KEY_FACT_PS[1:], gaps[1:])):
        if gb > ga + 1e-12:
            return f"gap grew from {ga!r} at p={pa!r} to {gb!r} at p={pb!r}"
    return None


def _concavity_for(spec: MeanSpec) -> Draw:
    def draw(rng: np.random.Generator) -> Case:
        n = _n(rng)
        return (spec, _weights(rng, n), _vector(rng, n), _vector(rng, n), float(rng.uniform()))

    return draw


def _check_concavity(case: Case) -> str | None:
    spec, w, x, y, t = case
    gap = concavity_probe(spec, w, x, y, t)
    scale = max(1.0, mean_dispatch(x, w, spec), mean_dispatch(y, w, spec))
    return None if gap >= -MEAN_TOL * scale else f"concavity gap {gap!r}"


def _superadditivity_for(p: float) -> Draw:
    def draw(rng: np.random.Generator) -> Case:
        n = _n(rng)
        return (p, _vector(rng, n), _vector(rng, n))

    return draw


def _check_superadditivity(case: Case) -> str | None:
    p, x, y = case
    gap = superadditivity_gap(p, x, y)
    scale = max(1.0, sum(x) + sum(y)) * len(x) ** (1.0 / p)
    return None if gap >= -MEAN_TOL * scale else f"superadditivity gap {gap!r}"


def _homogeneity(rng: np.random.Generator) -> Case:
    n = _n(rng)
    return (_pool_spec(rng), _weights(rng, n), _vector(rng, n), float(math.exp(rng.uniform(-5.0, 5.0))))


def _check_homogeneity(case: Case) -> str | None:
    spec, w, x, t = case
    gap = homogeneity_gap(spec, w, x, t)
    bound = MEAN_TOL * t * mean_dispatch(x, w, spec)
    return None if abs(gap) <= bound else f"homogeneity gap {gap!r} > {bound!r}"


def _fmean_agreement(rng: np.random.Generator) -> Case:
    n = _n(rng)
    p = float(rng.uniform(-3.0, 3.0))
    return (_weights(rng, n), _vector(rng, n), p if p != 0.0 else 1.0)


def _check_fmean_agreement(case: Case) -> str | None:
    w, x, p = case
    a, b = f_mean(x, w, PowerF(p)), generalized_mean(x, w, p)
    if _rel(a, b) > MEAN_TOL:
        return f"PowerF({p!r}) mean {a!r} vs power mean {b!r}"
    a, b = f_mean(x, w, LogF()), geometric_mean(x, w)
    return None if _rel(a, b) <= MEAN_TOL else f"LogF mean {a!r} vs geometric {b!r}"


# --- engine ---


def bisect_output(pool: Pool, delta: Sequence[float], j: int, iterations: int = 200) -> float:
    """Output of asset j found by bisection on tau(R, delta, lam) - C over [0, R_j)."""
    lo, hi = 0.0, pool.reserves[j]
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        lam = [0.0] * pool.n
        lam[j] = mid
        if trading_value(pool, Trade.of(delta, lam)) > pool.level:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _oracle(rng: np.random.Generator) -> Case:
    spec = Power(float(rng.uniform(0.05, 1.0)))
    pool = new_pool(_vector(rng, 2, 1.0, 10.0), Weights.uniform(2), spec)
    i, j = _pair(rng, 2)
    return (pool, i, j, _input_size(rng, pool, i, j, lo=0.05))


def _check_oracle(case: Case) -> str | None:
    pool, i, j, amount = case
    delta = [0.0, 0.0]
    delta[i] = amount
    got = solve_output(pool, delta, j).trade.lam[j]
    want = bisect_output(pool, delta, j)
    return None if _rel(got, want) <= ENGINE_TOL else f"solver {got!r} vs bisection {want!r}"


def _trade_case(pools: Sequence[Pool]) -> Draw:
    def draw(rng: np.random.Generator) -> Case:
        pool = pools[int(rng.integers(0, len(pools)))] if pools else _random_pool(rng)
        i, j = _pair(rng, pool.n)
        return (pool, i, j, _input_size(rng, pool, i, j))

    return draw


def _check_round_trip(case: Case) -> str | None:
    pool, i, j, amount = case
    delta = [0.0] * pool.n
    delta[i] = amount
    quote = solve_output(pool, delta, j)
    back = solve_input(pool, quote.trade.lam, i).trade.delta[i]
    return None if _rel(back, amount) <= ENGINE_TOL else f"round trip {amount!r} -> {back!r}"


def _check_quote_monotone(case: Case) -> str | None:
    pool, i, j, amount = case
    small, large = [0.0] * pool.n, [0.0] * pool.n
    small[i], large[i] = 0.5 * amount, amount
    a = solve_output(pool, small, j).trade.lam[j]
    b = solve_output(pool, large, j).trade.lam[j]
    if not b > a:
        return f"output did not grow: {a!r} -> {b!r}"
    if b / amount > (a / (0.5 * amount)) * (1.0 + MEAN_TOL):
        return f"marginal rate grew: {a / (0.5 * amount)!r} -> {b / amount!r}"
    return None


def _sequence_case(pools: Sequence[Pool]) -> Draw:
    def draw(rng: np.random.Generator) -> Case:
        pool = pools[int(rng.integers(0, len(pools)))] if pools else _random_pool(rng)
        return (pool, int(rng.integers(0, 2**32)))

    return draw


def _check_sequence(case: Case) -> str | None:
    start, seed = case
    rng = np.random.default_rng(seed)
    pool = start
    for _ in range(TRADE_SEQUENCE):
        i, j = _pair(rng, pool.n)
        delta = [0.0] * pool.n
        delta[i] = _input_size(rng, pool, i, j, hi=0.3)
        pool = execute_trade(pool, solve_output(pool, delta, j).trade)
    drift = abs(pool.recompute_level() - pool.level) / pool.level
    return None if drift <= DRIFT_TOL else f"level drifted by {drift!r} after {TRADE_SEQUENCE} trades"


def _spot(rng: np.random.Generator) -> Case:
    pool = _random_pool(rng, 1.0, 10.0)
    return (pool, *_pair(rng, pool.n))


def _check_spot(case: Case) -> str | None:
    pool, i, j = case
    a, b = spot_rate(pool, i, j), spot_rate_fd(pool, i, j)
    return None if _rel(a, b) <= FD_TOL else f"analytic {a!r} vs finite difference {b!r}"


def _constant_sum(rng: np.random.Generator) -> Case:
    pool = new_pool(_vector(rng, 2, 0.5, 50.0), Weights.uniform(2), Power(1.0))
    i, j = _pair(rng, 2)
    return (pool, i, j, float(rng.uniform(0.001, 0.999)) * pool.reserves[j])


def _check_constant_sum(case: Case) -> str | None:
    pool, i, j, amount = case
    delta = [0.0, 0.0]
    delta[i] = amount
    quote = solve_output(pool, delta, j)
    s = slippage(pool, amount, quote.trade.lam[j], i, j)
    return None if abs(s) <= 1e-15 else f"constant-sum slippage {s!r}"


def _bounded(rng: np.random.Generator) -> Case:
    p = float(rng.uniform(0.1, 1.0))
    return (new_pool(_vector(rng, 2, 0.5, 50.0), Weights.uniform(2), Power(p)),)


def _check_bounded(case: Case) -> str | None:
    (pool,) = case
    p = pool.spec.p
    r1 = pool.reserves[0]
    bound = max_buy_size(pool, 0, 1)
    want = 2.0 ** (1.0 / p) * pool.level - r1
    if _rel(bound, want) > BOUND_TOL:
        return f"max buy {bound!r} vs 2**(1/p) C - R1 = {want!r}"
    try:
        solve_output(pool, [bound * 1.01, 0.0], 1)
    except InfeasibleTradeError:
        pass
    else:
        return f"input {bound * 1.01!r} above the bound {bound!r} was accepted"
    geo = new_pool(pool.reserves, pool.weights, Geometric())
    solve_output(geo, [1e6 * r1, 0.0], 1)
    return None


def _coincidence(rng: np.random.Generator) -> Case:
    n = _n(rng)
    reserves, w = _vector(rng, n, 0.5, 50.0), _weights(rng, n)
    p = float(rng.uniform(0.05, 1.0))
    base, twin = ((Power(p), FMean(PowerF(p))), (Geometric(), FMean(LogF())))[int(rng.integers(0, 2))]
    a, b = new_pool(reserves, w, base), new_pool(reserves, w, twin)
    i, j = _pair(rng, n)
    return (a, b, i, j, _input_size(rng, a, i, j))


def _check_coincidence(case: Case) -> str | None:
    a, b, i, j, amount = case
    delta = [0.0] * a.n
    delta[i] = amount
    la = solve_output(a, delta, j).trade.lam[j]
    lb = solve_output(b, delta, j).trade.lam[j]
    return None if _rel(la, lb) <= MEAN_TOL else f"{a.spec!r} quotes {la!r}, {b.spec!r} quotes {lb!r}"


# --- schedule ---


def _check_schedule_grid(params: ScheduleParams) -> PropertyResult:
    grid = EpsGrid(DEFAULT_K_MIN, DEFAULT_K_MAX).points()
    c = exponent_c(params.s)
    constant = scaled_trade_constant(params)
    passed = 0
    for eps in grid:
        p = schedule_p(params, eps)
        residual = theorem_identity_residual(params, eps)
        scaled = math.exp(log_delta1_of_eps(p, params.level, eps) + c * math.log(eps))
        if not 0.0 < p <= 1.0:
            failure = f"p={p!r} outside (0, 1]"
        elif abs(residual) > ENGINE_TOL:
            failure = f"identity residual {residual!r}"
        elif _rel(scaled, constant) > FD_TOL:
            failure = f"scaled trade {scaled!r} vs constant {constant!r}"
        else:
            passed += 1
            continue
        return PropertyResult("schedule identity", len(grid), passed, f"{failure} | eps={eps!r}")
    return PropertyResult("schedule identity", len(grid), passed)


def run_property_suite(seed: int, cases: int, pools: Sequence[Pool] = ()) -> SuiteReport:
    """
    Run every property with a generator seeded by ``seed``.

    Args:
        seed: Seed of the numpy generator; same seed, same cases.
        cases: Cases per property (engine properties cap at 1000).
        pools: Extra pools whose trades join the round-trip and
            invariant-preservation properties.

    Returns:
        Per-property pass counts and the first counterexample of each.
    """
    if cases < 1:
        raise ValueError(f"cases must be >= 1, got {cases}")
    rng = np.random.default_rng(seed)
    engine_cases = min(cases, ENGINE_CASES)
    sequences = max(1, engine_cases // 100)
    pools = tuple(pools)
    results: list[PropertyResult] = [
        _run("idempotence", cases, rng, _idempotence, _check_idempotence),
        _run("bounds", cases, rng, _bounds, _check_bounds),
        _run("monotonicity", cases, rng, _monotone, _check_monotone),
        _run("power-mean ordering", cases, rng, _ordering, _check_ordering),
        _run("limit p->0", engine_cases, rng, _key_fact, _check_key_fact),
    ]
    for spec in [Power(p) for p in PROBE_PS] + [Geometric()]:
        results.append(_run(f"concavity {spec!r}", cases, rng, _concavity_for(spec), _check_concavity))
    for p in PROBE_PS:
        results.append(
            _run(f"superadditivity p={p!r}", cases, rng, _superadditivity_for(p), _check_superadditivity)
        )
    results += [
        _run("homogeneity", cases, rng, _homogeneity, _check_homogeneity),
        _run("f-mean agreement", cases, rng, _fmean_agreement, _check_fmean_agreement),
        _run("bisection oracle", engine_cases, rng, _oracle, _check_oracle),
        _run("solver round trip", engine_cases, rng, _trade_case(()), _check_round_trip),
        _run("quote monotonicity", engine_cases, rng, _trade_case(()), _check_quote_monotone),
        _run("invariant preservation", sequences, rng, _sequence_case(()), _check_sequence),
        _run("spot rate", engine_cases, rng, _spot, _check_spot),
        _run("constant-sum slippage", engine_cases, rng, _constant_sum, _check_constant_sum),
        _run("bounded liquidity", engine_cases, rng, _bounded, _check_bounded),
        _run("f-mean pool coincidence", engine_cases, rng, _coincidence, _check_coincidence),
        _check_schedule_grid(ScheduleParams(DEFAULT_C, DEFAULT_S)),
    ]
    if pools:
        results += [
            _run("config pool round trip", engine_cases, rng, _trade_case(pools), _check_round_trip),
            _run("config pool preservation", sequences, rng, _sequence_case(pools), _check_sequence),
        ]
    report = SuiteReport(seed, tuple(results))
    logger.info(
        "property suite seed=%d: %d/%d properties passed",
        seed,
        sum(r.ok for r in report.results),
        len(report.results),
    )
    return report


__all__: tuple[str, ...] = (
    "PropertyResult",
    "SuiteReport",
    "bisect_output",
    "run_property_suite",
)
