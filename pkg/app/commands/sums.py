import argparse

from app.commands.common import common_options, emit, non_negative_int, positive_int
from app.core.config import Settings
from app.schema.reports import SumReport
from kfib.exact import Params
from kfib.sums import SumKind, SumMethod, evaluate_sum


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "sum",
        parents=[common_options()],
        help="Sum F_{k,ai} for i = 0..n, optionally with alternating signs",
    )
    parser.add_argument("--k", type=positive_int, required=True)
    parser.add_argument("--a", type=positive_int, required=True)
    parser.add_argument("--n", type=non_negative_int, required=True)
    parser.add_argument("--alternating", action="store_true")
    parser.add_argument(
        "--method",
        choices=["closed", "naive", "matrix", "both"],
        default="closed",
        help="'both' compares the closed form with naive accumulation",
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: Settings) -> int:
    p = Params(k=args.k, a=args.a)
    kind = SumKind.ALTERNATING if args.alternating else SumKind.PLAIN

    if args.method != "both":
        result = evaluate_sum(p, args.n, kind, SumMethod(args.method))
        emit(cfg, SumReport.from_result(result), str(result.value))
        return 0

    closed = evaluate_sum(p, args.n, kind, SumMethod.CLOSED)
    naive = evaluate_sum(p, args.n, kind, SumMethod.NAIVE)
    match = closed.value == naive.value
    report = SumReport.from_result(closed, method="both").model_copy(
        update={"naive": str(naive.value), "match": match}
    )
    verdict = "MATCH" if match else "MISMATCH"
    emit(cfg, report, f"{closed.value} {naive.value} {verdict}")
    return 0 if match else 1
