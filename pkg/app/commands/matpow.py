import argparse
import logging

from app.commands.common import common_options, emit, non_negative_int, positive_int
from app.core.config import Settings
from app.schema.reports import MatpowReport
from kfib.closed_forms import r_matrix, r_power_closed, s_matrix, s_power_closed
from kfib.exact import Params, mat_pow

logger = logging.getLogger(__name__)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "matpow",
        parents=[common_options()],
        help="Closed-form R_a^n or S_a^n, cross-checked against binary powering",
    )
    parser.add_argument("--k", type=positive_int, required=True)
    parser.add_argument("--a", type=positive_int, required=True)
    parser.add_argument("--n", type=non_negative_int, required=True)
    parser.add_argument("--matrix", choices=["r", "s"], required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: Settings) -> int:
    p = Params(k=args.k, a=args.a)
    if args.matrix == "r":
        closed, direct = r_power_closed(p, args.n), mat_pow(r_matrix(p), args.n)
    else:
        closed, direct = s_power_closed(p, args.n), mat_pow(s_matrix(p), args.n)

    consistent = closed == direct
    if not consistent:
        logger.error("closed form %s disagrees with binary powering %s", closed, direct)
    report = MatpowReport(
        k=str(args.k),
        a=str(args.a),
        n=str(args.n),
        matrix=args.matrix,
        entries=MatpowReport.render_entries(closed),
        consistent=consistent,
    )
    emit(cfg, report, f"{closed} {'CONSISTENT' if consistent else 'INCONSISTENT'}")
    return 0 if consistent else 3
