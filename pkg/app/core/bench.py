"""
Benchmark harness comparing F_{k,n} evaluation strategies.

For each n every strategy is run once with an OpCounter (which doubles as the
warm-up), then `reps` timed runs without instrumentation. Values are compared
across strategies before any record is returned.
"""

import logging
import statistics
import time
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field

from adapters.strategies.base import BaseStrategy
from kfib.errors import StrategyMismatch
from kfib.exact import OpCounter

logger = logging.getLogger(__name__)


class BenchRecord(BaseModel):
    """One (strategy, k, n) measurement."""

    model_config = ConfigDict(frozen=True)

    strategy: str
    k: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    wall_time: float = Field(..., ge=0, description="Median seconds over the timed reps")
    mults: int = Field(..., ge=0)
    digits: int = Field(..., ge=1)

    @property
    def millis(self) -> float:
        return self.wall_time * 1000.0


def decimal_digits(value: int) -> int:
    return len(str(abs(value)))


def _measure(strategy: BaseStrategy, k: int, n: int, reps: int) -> tuple[int, int, float]:
    counter = OpCounter()
    value = strategy.evaluate(k, n, counter)
    if counter.mults > strategy.max_mults(n):
        raise StrategyMismatch(
            f"StrategyMismatch: {strategy.strategy_name} used {counter.mults} "
            f"multiplications at n={n}, bound is {strategy.max_mults(n)}"
        )
    times = []
    for _ in range(reps):
        start = time.perf_counter()
        strategy.evaluate(k, n)
        times.append(time.perf_counter() - start)
    return value, counter.mults, statistics.median(times)


def run_bench(
    k: int, ns: Sequence[int], strategies: Sequence[BaseStrategy], reps: int
) -> list[BenchRecord]:
    """
    Time every strategy at every n, sequentially on this thread.

    Raises:
        ValueError: If reps < 1 or no strategy is given
        StrategyMismatch: If strategies disagree on a value or one exceeds
            its multiplication bound
    """
    if reps < 1:
        raise ValueError(f"reps must be at least 1, got {reps}")
    if not strategies:
        raise ValueError("run_bench needs at least one strategy")

    records: list[BenchRecord] = []
    for n in ns:
        values: dict[str, int] = {}
        timings: list[tuple[str, int, float]] = []
        for strategy in strategies:
            value, mults, wall = _measure(strategy, k, n, reps)
            values[strategy.strategy_name] = value
            timings.append((strategy.strategy_name, mults, wall))
            logger.debug(
                "bench %s k=%d n=%d mults=%d median=%.6fs",
                strategy.strategy_name, k, n, mults, wall,
            )
        if len(set(values.values())) > 1:
            raise StrategyMismatch(
                f"StrategyMismatch: strategies disagree at k={k}, n={n}: "
                + ", ".join(f"{name} ends ...{str(v)[-12:]}" for name, v in values.items())
            )
        digits = decimal_digits(next(iter(values.values())))
        records.extend(
            BenchRecord(strategy=name, k=k, n=n, wall_time=wall, mults=mults, digits=digits)
            for name, mults, wall in timings
        )
    return records
