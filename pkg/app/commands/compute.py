import argparse

from app.commands.common import common_options, emit, integer, positive_int
from app.core.config import Settings
from app.schema.reports import ComputeReport
from kfib.exact import Params
from kfib.sequences import seq_point


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "compute", parents=[common_options()], help="Print F_{k,n} or L_{k,n}"
    )
    parser.add_argument("--k", type=positive_int, required=True)
    parser.add_argument("--n", type=integer, required=True, help="Any integer index")
    parser.add_argument("--lucas", action="store_true", help="Print L_{k,n} instead")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: Settings) -> int:
    point = seq_point(Params(k=args.k, a=1), args.n)
    value = point.l if args.lucas else point.f
    report = ComputeReport(
        k=str(args.k),
        n=str(args.n),
        kind="lucas" if args.lucas else "fibonacci",
        value=str(value),
    )
    emit(cfg, report, str(value))
    return 0
