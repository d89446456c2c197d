"""
Command-line entry point: ``picog3m {quote,slippage,schedule,verify,experiment}``.

Asset indices on the command line are 1-based. Exit codes: 0 success,
1 failed property or slope band, 2 bad input or I/O error, 3 infeasible trade.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from collections.abc import Sequence
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from ..analytics import (
    ScheduleParams,
    exponent_c,
    schedule_p,
    slippage,
    spot_rate,
    theorem_identity_residual,
)
from ..engine import Pool, Trade, is_valid_trade, solve_output
from ..errors import ConfigError, ExperimentError, G3MError, InfeasibleTradeError
from ..experiments import (
    DEFAULT_C,
    DEFAULT_K_MAX,
    DEFAULT_K_MIN,
    DEFAULT_S,
    DEFAULT_TAIL,
    EpsGrid,
    ScalingConfig,
    run_property_suite,
    run_scaling,
)
from ._config import load_pool_config
from ._csv import write_scaling_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3

DEFAULT_EPS = 2.0**-8
DEFAULT_SEED = 0
DEFAULT_CASES = 10_000


def number(text: str) -> float:
    """Parse ``4/3`` with Fraction and ``0.5``/``1e-3`` with Decimal, then convert once."""
    try:
        value = float(Fraction(text)) if "/" in text else float(Decimal(text))
    except (ValueError, ZeroDivisionError, InvalidOperation):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"number must be finite, got {text!r}")
    return value


def asset_amount(text: str) -> tuple[int, float]:
    """``ASSET=AMOUNT`` with a 1-based asset index."""
    asset, sep, amount = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected ASSET=AMOUNT, got {text!r}")
    return asset_index(asset), number(amount)


def asset_index(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"asset must be an integer, got {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"assets are numbered from 1, got {k}")
    return k


def _index(pool: Pool, k: int) -> int:
    if k > pool.n:
        raise ConfigError(f"asset {k} out of range: pool has {pool.n} assets")
    return k - 1


def _fmt(x: float | None) -> str:
    return "n/a" if x is None else format(x, ".17g")


def _fmt_vec(xs: Sequence[float]) -> str:
    return ", ".join(_fmt(x) for x in xs)


# --- commands ---


def cmd_quote(args: argparse.Namespace) -> int:
    pool = load_pool_config(args.config)
    j = _index(pool, args.out)
    delta = [0.0] * pool.n
    for k, amount in args.inputs:
        if not amount > 0.0:
            raise ConfigError(f"input amount for asset {k} must be > 0, got {amount!r}")
        delta[_index(pool, k)] += amount
    quote = solve_output(pool, delta, j)
    print(f"output asset {args.out}: {_fmt(quote.trade.lam[j])}")
    print(f"post reserves: {_fmt_vec(quote.post_reserves)}")
    print(f"spot rate: {_fmt(quote.spot_rate)}")
    print(f"slippage: {_fmt(quote.slippage)}")
    print(f"invariant residual: {_fmt(quote.invariant_residual)}")
    return EXIT_OK


def cmd_slippage(args: argparse.Namespace) -> int:
    pool = load_pool_config(args.config)
    (ki, amount_in), (kj, amount_out) = args.input, args.output
    i, j = _index(pool, ki), _index(pool, kj)
    rate = spot_rate(pool, i, j)
    print(f"spot rate: {_fmt(rate)}")
    print(f"realized rate: {_fmt(amount_in / amount_out) if amount_out > 0.0 else 'n/a'}")
    print(f"slippage: {_fmt(slippage(pool, amount_in, amount_out, i, j))}")
    valid = is_valid_trade(pool, Trade.pair(pool.n, i, amount_in, j, amount_out))
    print(f"valid trade: {'yes' if valid else 'no'}")
    return EXIT_OK


def cmd_schedule(args: argparse.Namespace) -> int:
    params = ScheduleParams(args.C, args.s)
    print(f"p: {_fmt(schedule_p(params, args.eps))}")
    print(f"c: {_fmt(exponent_c(params.s))}")
    print(f"identity residual: {_fmt(theorem_identity_residual(params, args.eps))}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.cases < 1:
        raise ConfigError(f"--cases must be >= 1, got {args.cases}")
    pools = tuple(load_pool_config(path) for path in args.config or ())
    report = run_property_suite(args.seed, args.cases, pools)
    for r in report.results:
        print(f"{'ok  ' if r.ok else 'FAIL'} {r.name}: {r.passed}/{r.cases}")
    failure = report.first_failure
    if failure is not None:
        print(f"counterexample for {failure.name}: {failure.counterexample}")
        return EXIT_FAILED
    print(f"all {len(report.results)} properties passed (seed={args.seed})")
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    config = ScalingConfig(
        params=ScheduleParams(args.C, args.s),
        grid=EpsGrid(args.kmin, args.kmax, count=args.count),
        tail_fraction=args.tail,
        workers=args.workers,
    )
    report = run_scaling(config)
    if args.out is not None:
        write_scaling_csv(report.rows, args.out)
    print(f"slope_S: {_fmt(report.slope_s)}")
    print(f"slope_D: {_fmt(report.slope_d)}")
    print(f"slope_S0: {_fmt(report.slope_s0)}")
    print(f"c_target: {_fmt(report.c_target)}")
    if not report.within_bands():
        print(
            "slopes outside the bands: S_p and delta1 must lie within 0.05 of -c_target, "
            "S_0 within 0.02 of -1",
            file=sys.stderr,
        )
        return EXIT_FAILED
    return EXIT_OK


# --- parser ---


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="picog3m",
        description="Generalized-mean market maker quotes, schedule and experiments.",
    )
    ap.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = ap.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quote", help="quote the output for given inputs")
    q.add_argument("config", help="pool config JSON")
    q.add_argument(
        "--in", dest="inputs", type=asset_amount, action="append", required=True,
        metavar="ASSET=AMOUNT",
    )
    q.add_argument("--out", type=asset_index, required=True, metavar="ASSET")
    q.set_defaults(handler=cmd_quote)

    s = sub.add_parser("slippage", help="spot rate and slippage of a pair trade")
    s.add_argument("config", help="pool config JSON")
    s.add_argument("--in", dest="input", type=asset_amount, required=True, metavar="ASSET=AMOUNT")
    s.add_argument("--out", dest="output", type=asset_amount, required=True, metavar="ASSET=AMOUNT")
    s.set_defaults(handler=cmd_slippage)

    sc = sub.add_parser("schedule", help="exponent schedule p(eps) and c(s)")
    sc.add_argument("--C", type=number, default=DEFAULT_C)
    sc.add_argument("--s", type=number, default=DEFAULT_S)
    sc.add_argument("--eps", type=number, default=DEFAULT_EPS)
    sc.set_defaults(handler=cmd_schedule)

    v = sub.add_parser("verify", help="run the seeded property suite")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--cases", type=int, default=DEFAULT_CASES)
    v.add_argument("--config", action="append", help="extra pool config JSON (repeatable)")
    v.set_defaults(handler=cmd_verify)

    e = sub.add_parser("experiment", help="eps scaling sweep with slope fits")
    e.add_argument("--C", type=number, default=DEFAULT_C)
    e.add_argument("--s", type=number, default=DEFAULT_S)
    e.add_argument("--kmin", type=number, default=DEFAULT_K_MIN)
    e.add_argument("--kmax", type=number, default=DEFAULT_K_MAX)
    e.add_argument("--count", type=int, default=None, help="grid points (default kmax-kmin+1)")
    e.add_argument("--tail", type=number, default=DEFAULT_TAIL)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--out", default=None, help="CSV output path")
    e.set_defaults(handler=cmd_experiment)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logger.debug("command %s: %r", args.command, vars(args))
    try:
        return args.handler(args)
    except InfeasibleTradeError as exc:
        print(f"picog3m: infeasible trade: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ExperimentError as exc:
        print(f"picog3m: experiment failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (G3MError, OSError) as exc:
        print(f"picog3m: {exc}", file=sys.stderr)
        return EXIT_INPUT


__all__: tuple[str, ...] = (
    "build_parser",
    "main",
)
