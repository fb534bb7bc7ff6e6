from adapters import StrategyFactory, get_strategy
from adapters.strategies.base import BaseStrategy


def get_strategies(selection: str) -> list[BaseStrategy]:
    """
    Resolve a --strategy value to strategy instances.

    'all' returns every registered strategy in registration order; any other
    value must name a registered strategy.
    """
    if selection == "all":
        return [get_strategy(name) for name in StrategyFactory.get_registered_strategies()]
    return [get_strategy(selection)]
