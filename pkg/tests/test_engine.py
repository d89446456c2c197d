"""Tests for pools, the constant-level rule and the swap solvers."""

import math

import pytest

from picog3m import (
    UNBOUNDED,
    DomainError,
    FMean,
    Geometric,
    InfeasibleTradeError,
    InvalidTradeError,
    LogF,
    Power,
    PowerF,
    Trade,
    Weights,
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

HALF = Weights.uniform(2)


def _pool(spec, reserves=(4.0, 4.0), weights=HALF):
    return new_pool(reserves, weights, spec)


def test_new_pool_caches_level() -> None:
    pool = _pool(Power(0.5), (1.0, 9.0))
    assert pool.level == pytest.approx(4.0, rel=1e-15)
    assert pool.n == 2
    assert pool.recompute_level() == pool.level


def test_new_pool_rejects_invalid_spec() -> None:
    with pytest.raises(DomainError, match="pool-valid"):
        _pool(Power(1.5))


def test_new_pool_rejects_reserves() -> None:
    with pytest.raises(DomainError, match="reserve 1"):
        _pool(Geometric(), (4.0, 0.0))
    with pytest.raises(DomainError, match="dimension"):
        _pool(Geometric(), (4.0, 4.0, 4.0))


def test_trade_rejects_negative_amount() -> None:
    with pytest.raises(DomainError):
        Trade.of([-1.0, 0.0], [0.0, 0.0])


def test_zero_trade_is_valid() -> None:
    pool = _pool(Power(0.5), (1.0, 9.0))
    zero = Trade.zero(2)
    assert is_valid_trade(pool, zero)
    assert post_trade_reserves(pool, zero) == pool.reserves


def test_off_level_trade_is_invalid() -> None:
    # (9, 0.5) sits at level (1.5 + 0.5**0.5 / 2)**2 ~ 3.44, not 4
    pool = _pool(Power(0.5))
    trade = Trade.of([5.0, 0.0], [0.0, 3.5])
    assert not is_valid_trade(pool, trade)
    assert invariant_residual(pool, trade) < 0.0


def test_trading_value_and_residual() -> None:
    pool = _pool(Geometric())
    trade = Trade.pair(2, 0, 4.0, 1, 2.0)
    assert trading_value(pool, trade) == pytest.approx(4.0, rel=1e-15)
    assert abs(invariant_residual(pool, trade)) <= 1e-12


def test_trading_value_negative_reserve() -> None:
    pool = _pool(Geometric())
    with pytest.raises(DomainError, match="negative"):
        trading_value(pool, Trade.pair(2, 0, 1.0, 1, 5.0))


def test_execute_trade_keeps_level() -> None:
    pool = _pool(Geometric())
    after = execute_trade(pool, Trade.pair(2, 0, 4.0, 1, 2.0))
    assert after.reserves == (8.0, 2.0)
    assert after.level == pool.level
    assert pool.reserves == (4.0, 4.0)


def test_execute_trade_rejects_off_level() -> None:
    pool = _pool(Geometric())
    with pytest.raises(InvalidTradeError, match="level"):
        execute_trade(pool, Trade.pair(2, 0, 4.0, 1, 3.0))


def test_execute_trade_rejects_drained_reserve() -> None:
    pool = _pool(Power(1.0))
    with pytest.raises(InvalidTradeError, match="> 0"):
        execute_trade(pool, Trade.pair(2, 0, 4.0, 1, 4.0))


@pytest.mark.parametrize(
    "spec, amount_in, expected",
    [
        (Geometric(), 4.0, 2.0),
        (Power(0.5), 5.0, 3.0),
        (Power(1.0), 1.5, 1.5),
        (FMean(LogF()), 4.0, 2.0),
        (FMean(PowerF(0.5)), 5.0, 3.0),
    ],
)
def test_solve_output_examples(spec, amount_in: float, expected: float) -> None:
    quote = solve_output(_pool(spec), [amount_in, 0.0], 1)
    assert quote.trade.lam[1] == pytest.approx(expected, rel=1e-12)
    assert quote.trade.delta == (amount_in, 0.0)
    assert abs(quote.invariant_residual) <= 1e-9 * 4.0


def test_solve_output_quote_pricing() -> None:
    quote = solve_output(_pool(Power(0.5)), [5.0, 0.0], 1)
    assert quote.spot_rate == pytest.approx(1.0)
    assert quote.slippage == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert quote.post_reserves == pytest.approx((9.0, 1.0))


def test_solve_output_scales_with_tiny_reserves() -> None:
    small = solve_output(new_pool([1e-12, 2e-12], HALF, Power(0.9)), [5e-13, 0.0], 1)
    unit = solve_output(new_pool([1.0, 2.0], HALF, Power(0.9)), [0.5, 0.0], 1)
    assert small.trade.lam[1] > 0.0
    assert small.trade.lam[1] == pytest.approx(1e-12 * unit.trade.lam[1], rel=1e-9)


def test_solve_output_constant_sum_is_exact() -> None:
    quote = solve_output(_pool(Power(1.0), (3.0, 7.0)), [2.5, 0.0], 1)
    assert quote.trade.lam[1] == 2.5
    assert quote.slippage == 0.0


@pytest.mark.parametrize(
    "spec, amount_out, expected",
    [
        (Power(0.5), 3.0, 5.0),
        (Geometric(), 2.0, 4.0),
        (Power(1.0), 3.0, 3.0),
    ],
)
def test_solve_input_examples(spec, amount_out: float, expected: float) -> None:
    quote = solve_input(_pool(spec), [0.0, amount_out], 0)
    assert quote.trade.delta[0] == pytest.approx(expected, rel=1e-12)


def test_solve_input_rejects_full_drain() -> None:
    with pytest.raises(DomainError, match="below reserve"):
        solve_input(_pool(Geometric()), [0.0, 4.0], 0)


def test_solve_output_rejects_input_on_output_asset() -> None:
    with pytest.raises(DomainError, match="output asset"):
        solve_output(_pool(Geometric()), [1.0, 1.0], 1)


def test_solve_output_rejects_bad_index() -> None:
    with pytest.raises(DomainError, match="out of range"):
        solve_output(_pool(Geometric()), [1.0, 0.0], 2)


def test_solve_output_zero_input() -> None:
    quote = solve_output(_pool(Power(0.5)), [0.0, 0.0], 1)
    assert quote.trade.lam == (0.0, 0.0)
    assert quote.slippage is None
    assert quote.spot_rate is None


def test_constant_sum_infeasible_beyond_reserve() -> None:
    with pytest.raises(InfeasibleTradeError, match="liquidity"):
        solve_output(_pool(Power(1.0)), [13.0, 0.0], 1)


def test_power_infeasible_beyond_bound() -> None:
    pool = _pool(Power(0.5))
    bound = max_buy_size(pool, 0, 1)
    assert bound == pytest.approx(12.0, rel=1e-12)
    solve_output(pool, [0.99 * bound, 0.0], 1)
    with pytest.raises(InfeasibleTradeError):
        solve_output(pool, [1.01 * bound, 0.0], 1)


def test_max_buy_size() -> None:
    assert max_buy_size(_pool(Power(1.0)), 0, 1) == pytest.approx(4.0)
    assert max_buy_size(_pool(Geometric()), 0, 1) == UNBOUNDED
    assert max_buy_size(_pool(FMean(LogF())), 1, 0) == math.inf
    with pytest.raises(DomainError):
        max_buy_size(_pool(Geometric()), 0, 0)


def test_max_buy_size_weighted_constant_sum() -> None:
    pool = _pool(Power(1.0), (2.0, 6.0), Weights.of([0.25, 0.75]))
    # 0.25 * delta = 0.75 * 6
    assert max_buy_size(pool, 0, 1) == pytest.approx(18.0)


def test_geometric_accepts_huge_input() -> None:
    pool = _pool(Geometric())
    quote = solve_output(pool, [4e6, 0.0], 1)
    assert 0.0 < quote.trade.lam[1] < 4.0
    assert quote.post_reserves[1] == pytest.approx(16.0 / (4e6 + 4.0), rel=1e-8)


def test_three_asset_round_trip() -> None:
    pool = _pool(Power(0.4), (3.0, 5.0, 11.0), Weights.of([0.2, 0.3, 0.5]))
    out = solve_output(pool, [1.7, 0.0, 0.0], 2)
    back = solve_input(pool, out.trade.lam, 0)
    assert back.trade.delta[0] == pytest.approx(1.7, rel=1e-9)


def test_multi_input_quote_has_no_slippage() -> None:
    pool = _pool(Geometric(), (3.0, 5.0, 11.0), Weights.of([0.2, 0.3, 0.5]))
    quote = solve_output(pool, [1.0, 2.0, 0.0], 2)
    assert quote.slippage is None
    assert quote.trade.lam[2] > 0.0
    assert is_valid_trade(pool, quote.trade)


def test_sequential_trades_do_not_drift() -> None:
    pool = _pool(Power(0.3), (10.0, 20.0), Weights.of([0.4, 0.6]))
    level = pool.level
    for k in range(100):
        i, j = (0, 1) if k % 2 else (1, 0)
        delta = [0.0, 0.0]
        delta[i] = 0.1 * pool.reserves[i]
        pool = execute_trade(pool, solve_output(pool, delta, j).trade)
    assert pool.level == level
    assert pool.recompute_level() == pytest.approx(level, rel=1e-8)


def test_is_valid_trade_rejects_tolerance() -> None:
    with pytest.raises(DomainError):
        is_valid_trade(_pool(Geometric()), Trade.zero(2), rel_tol=0.0)
