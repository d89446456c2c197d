"""
Scaling CSV: one row per eps, 17 significant digits, LF line endings.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable
from pathlib import Path

from ..errors import ConfigError
from ..experiments import ScalingRow

HEADER = ("eps", "p", "delta1", "S_p", "S_0", "identity_residual")


def _fmt(x: float) -> str:
    return format(x, ".17g")


def format_scaling_csv(rows: Iterable[ScalingRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for r in rows:
        writer.writerow(
            [_fmt(v) for v in (r.eps, r.p, r.delta1, r.s_p, r.s_0, r.identity_residual)]
        )
    return buf.getvalue()


def write_scaling_csv(rows: Iterable[ScalingRow], path: str | Path) -> None:
    # newline="" keeps LF on every platform
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_scaling_csv(rows))


def read_scaling_csv(text: str) -> tuple[ScalingRow, ...]:
    """Parse CSV text written by :func:`format_scaling_csv`."""
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader, None)
    if header is None or tuple(header) != HEADER:
        raise ConfigError(f"scaling CSV header must be {','.join(HEADER)}, got {header!r}")
    rows = []
    for lineno, fields in enumerate(reader, start=2):
        if len(fields) != len(HEADER):
            raise ConfigError(f"line {lineno}: expected {len(HEADER)} fields, got {len(fields)}")
        try:
            eps, p, d1, s_p, s_0, res = (float(v) for v in fields)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from exc
        rows.append(ScalingRow(eps, p, d1, s_p, s_0, res))
    return tuple(rows)


__all__: tuple[str, ...] = (
    "HEADER",
    "format_scaling_csv",
    "read_scaling_csv",
    "write_scaling_csv",
)
