import sys

import pytest

from adapters import StrategyFactory, register_default_strategies

# F_{1,10^6} has more digits than the default int -> str limit.
sys.set_int_max_str_digits(0)


@pytest.fixture(autouse=True)
def reset_strategy_factory():
    """Every test starts from the three default strategies."""
    yield
    StrategyFactory.clear_registry()
    register_default_strategies()
