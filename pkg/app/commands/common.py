"""Argument types and output helpers shared by the command modules."""

import argparse

from pydantic import BaseModel

from app.core.config import Settings


def integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None


def positive_int(text: str) -> int:
    value = integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    value = integer(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def common_options() -> argparse.ArgumentParser:
    """Parent parser with the options every subcommand accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["text", "json"], default=None)
    parent.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None
    )
    return parent


def emit(cfg: Settings, report: BaseModel, text: str) -> None:
    """Print `report` as JSON or `text` as-is, per the configured format."""
    if cfg.OUTPUT_FORMAT == "json":
        print(report.model_dump_json(exclude_none=True))
    else:
        print(text)
