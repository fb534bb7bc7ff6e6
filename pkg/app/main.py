import argparse
import sys
from typing import Optional, Sequence

from app.commands import COMMANDS
from app.core.config import settings
from app.core.logging import configure_logging
from kfib.errors import KFibError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kfib",
        description="Exact k-Fibonacci and k-Lucas arithmetic at arithmetic indexes",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Include commands
    for command in COMMANDS:
        command.add_parser(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and return its exit status.

    0 success, 1 verification failure or MISMATCH, 2 usage error,
    3 internal consistency failure (any KFibError).
    """
    sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    cfg = settings.with_overrides(OUTPUT_FORMAT=args.format, LOG_LEVEL=args.log_level)
    configure_logging(cfg.LOG_LEVEL)
    try:
        return args.handler(args, cfg)
    except KFibError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
