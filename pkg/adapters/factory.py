"""
Strategy Factory

This module provides a factory pattern for creating and managing evaluation
strategies. It supports dynamic registration of new strategies and maintains
singleton instances.
"""

import logging
from typing import Dict, Type

from adapters.strategies.base import BaseStrategy

logger = logging.getLogger(__name__)


class StrategyFactory:
    """
    Factory class for creating and managing strategies.

    Only one instance of each strategy type exists. New strategy types can be
    registered at runtime, e.g. by tests or by a benchmark extension.
    """

    # Registry of strategy types, in registration order
    _registry: Dict[str, Type[BaseStrategy]] = {}

    # Cache of strategy instances (singleton pattern)
    _instances: Dict[str, BaseStrategy] = {}

    @classmethod
    def register(cls, name: str, strategy_class: Type[BaseStrategy]) -> None:
        """
        Register a new strategy type.

        Args:
            name: Unique identifier for the strategy (e.g., 'iterative', 'fast-doubling')
            strategy_class: The strategy class to register

        Raises:
            ValueError: If the strategy name is already registered
            TypeError: If the class does not inherit from BaseStrategy
        """
        if name in cls._registry:
            raise ValueError(f"Strategy '{name}' is already registered")

        if not isinstance(strategy_class, type) or not issubclass(strategy_class, BaseStrategy):
            raise TypeError("Strategy class must inherit from BaseStrategy")

        cls._registry[name] = strategy_class
        logger.debug("registered strategy %s -> %s", name, strategy_class.__name__)

    @classmethod
    def unregister(cls, name: str) -> None:
        """Remove a strategy type and its cached instance, if any."""
        cls._registry.pop(name, None)
        cls._instances.pop(name, None)

    @classmethod
    def create(cls, name: str) -> BaseStrategy:
        """
        Create or retrieve a strategy instance.

        Args:
            name: Unique identifier of the strategy to create

        Returns:
            Instance of the requested strategy

        Raises:
            ValueError: If the strategy name is not registered
        """
        if name in cls._instances:
            return cls._instances[name]

        if name not in cls._registry:
            raise ValueError(
                f"Strategy '{name}' is not registered. "
                f"Available strategies: {list(cls._registry.keys())}"
            )

        instance = cls._registry[name]()
        cls._instances[name] = instance
        return instance

    @classmethod
    def get_registered_strategies(cls) -> list[str]:
        """
        Get list of all registered strategy names.

        Returns:
            List of registered strategy names, in registration order
        """
        return list(cls._registry.keys())

    @classmethod
    def reset(cls) -> None:
        """
        Reset all strategy instances.

        Does not clear the registry.
        """
        cls._instances = {}

    @classmethod
    def clear_registry(cls) -> None:
        """
        Clear the entire strategy registry and all instances.

        Warning: This will remove the default strategies too; call
        register_default_strategies() to bring them back.
        """
        cls._registry = {}
        cls._instances = {}


def get_strategy(name: str) -> BaseStrategy:
    """
    Convenience function to get a strategy instance.

    Raises:
        ValueError: If the strategy name is not registered
    """
    return StrategyFactory.create(name)


def register_default_strategies() -> None:
    """Register the built-in strategies that are not registered yet."""
    try:
        from adapters.strategies import (
            FastDoublingStrategy,
            IterativeStrategy,
            MatrixPowStrategy,
        )
    except ImportError as e:
        logger.warning("Could not register default strategies: %s", e)
        return

    defaults = {
        "iterative": IterativeStrategy,
        "matrix-pow": MatrixPowStrategy,
        "fast-doubling": FastDoublingStrategy,
    }
    for name, strategy_class in defaults.items():
        if name not in StrategyFactory.get_registered_strategies():
            StrategyFactory.register(name, strategy_class)


# Register strategies when module is imported
register_default_strategies()
