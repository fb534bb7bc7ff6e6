"""
Subcommands of the kfib CLI, one module each.

Every module exposes add_parser(subparsers), which registers the command and
sets `handler`, and handle(args, cfg) -> exit status.
"""

from app.commands import bench, compute, matpow, sums, verify

COMMANDS = [compute, matpow, sums, verify, bench]

__all__ = ["COMMANDS"]
