"""Command-line surface, pool config documents and the scaling CSV."""

from ._config import PoolConfigDoc, dump_pool_config, load_pool_config, parse_pool_config
from ._csv import HEADER, format_scaling_csv, read_scaling_csv, write_scaling_csv
from ._main import build_parser, main

__all__: tuple[str, ...] = (
    # Config
    "PoolConfigDoc",
    "dump_pool_config",
    "load_pool_config",
    "parse_pool_config",
    # CSV
    "HEADER",
    "format_scaling_csv",
    "read_scaling_csv",
    "write_scaling_csv",
    # Entry point
    "build_parser",
    "main",
)
