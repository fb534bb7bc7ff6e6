from typing import Optional

import pytest

from adapters import StrategyFactory
from adapters.strategies import BaseStrategy, IterativeStrategy
from app.core.bench import BenchRecord, decimal_digits, run_bench
from app.dependencies import get_strategies
from kfib.errors import StrategyMismatch
from kfib.exact import OpCounter


class OffByOneStrategy(IterativeStrategy):
    @property
    def strategy_name(self) -> str:
        return "off-by-one"

    def evaluate(self, k: int, n: int, counter: Optional[OpCounter] = None) -> int:
        return super().evaluate(k, n, counter) + 1


class GreedyStrategy(IterativeStrategy):
    @property
    def strategy_name(self) -> str:
        return "greedy"

    def max_mults(self, n: int) -> int:
        return 0


def test_records_for_every_strategy_and_n():
    records = run_bench(1, [1, 10], get_strategies("all"), reps=1)
    assert [(r.strategy, r.n) for r in records] == [
        ("iterative", 1),
        ("matrix-pow", 1),
        ("fast-doubling", 1),
        ("iterative", 10),
        ("matrix-pow", 10),
        ("fast-doubling", 10),
    ]
    assert all(r.mults == 0 and r.digits == 1 for r in records[:3])
    assert all(r.digits == 2 for r in records[3:])
    assert all(r.wall_time >= 0 for r in records)


def test_multiplication_ordering():
    records = {r.strategy: r for r in run_bench(1, [1000], get_strategies("all"), reps=1)}
    assert records["fast-doubling"].mults <= records["matrix-pow"].mults <= records["iterative"].mults
    assert records["iterative"].mults == 999


def test_digits_of_one_hundred_thousandth():
    records = run_bench(1, [100_000], get_strategies("fast-doubling"), reps=1)
    assert records[0].digits == 20899


def test_disagreement_raises():
    StrategyFactory.register("off-by-one", OffByOneStrategy)
    with pytest.raises(StrategyMismatch):
        run_bench(2, [5], get_strategies("all"), reps=1)


def test_bound_violation_raises():
    with pytest.raises(StrategyMismatch, match="bound"):
        run_bench(1, [50], [GreedyStrategy()], reps=1)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        run_bench(1, [5], get_strategies("all"), reps=0)
    with pytest.raises(ValueError):
        run_bench(1, [5], [], reps=1)


def test_record_millis():
    record = BenchRecord(strategy="iterative", k=1, n=5, wall_time=0.25, mults=4, digits=1)
    assert record.millis == 250.0


def test_decimal_digits():
    assert decimal_digits(0) == 1
    assert decimal_digits(-120) == 3
