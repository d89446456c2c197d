from collections.abc import Sequence

SMALL_P: float

def power_shift(x: float, p: float) -> float: ...
def power_unshift(v: float, p: float) -> float: ...
def power_mean(x: Sequence[float], w: Sequence[float], p: float) -> float: ...
def log_mean(x: Sequence[float], w: Sequence[float]) -> float: ...
