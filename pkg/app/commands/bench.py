import argparse

from adapters import StrategyFactory
from app.commands.common import common_options, emit, positive_int
from app.core.bench import BenchRecord, run_bench
from app.core.config import Settings
from app.dependencies import get_strategies
from app.schema.reports import BenchReport, BenchRow


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "bench",
        parents=[common_options()],
        help="Time and count multiplications of each F_{k,n} strategy",
    )
    parser.add_argument("--k", type=positive_int, required=True)
    parser.add_argument("--n", type=positive_int, nargs="+", required=True)
    parser.add_argument(
        "--strategy",
        choices=["all", *StrategyFactory.get_registered_strategies()],
        default="all",
    )
    parser.add_argument("--reps", type=positive_int, default=None)
    parser.set_defaults(handler=handle)


def render_table(records: list[BenchRecord]) -> str:
    header = f"{'strategy':<14} {'k':>3} {'n':>10} {'millis':>12} {'mults':>10} {'digits':>10}"
    lines = [header, "-" * len(header)]
    for r in records:
        lines.append(
            f"{r.strategy:<14} {r.k:>3} {r.n:>10} {r.millis:>12.3f} {r.mults:>10} {r.digits:>10}"
        )
    return "\n".join(lines)


def handle(args: argparse.Namespace, cfg: Settings) -> int:
    cfg = cfg.with_overrides(BENCH_REPS=args.reps)
    records = run_bench(args.k, args.n, get_strategies(args.strategy), cfg.BENCH_REPS)
    report = BenchReport(records=[BenchRow.from_record(r) for r in records])
    emit(cfg, report, render_table(records))
    return 0
