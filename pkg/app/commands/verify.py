"""
`verify` command: run identity suites over a parameter grid.

`--identity all` runs every suite and then the alternating-sum parity audit.
The audit only reports where the literal alternating formula breaks at odd n;
it never changes the exit status.
"""

import argparse

from app.commands.common import common_options, emit, positive_int
from app.core.config import Settings
from app.schema.reports import ErratumRow, VerifyAllReport, VerifyReport
from kfib.identities import Identity, IdentityReport, verify_grid
from kfib.sums import audit_alt_sum_parity


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "verify", parents=[common_options()], help="Check identities on a parameter grid"
    )
    parser.add_argument(
        "--identity", choices=[i.value for i in Identity] + ["all"], default="all"
    )
    parser.add_argument("--k-max", type=positive_int, default=None)
    parser.add_argument("--a-max", type=positive_int, default=None)
    parser.add_argument("--n-max", type=positive_int, default=None)
    parser.add_argument("--m-max", type=positive_int, default=None)
    parser.add_argument("--workers", type=positive_int, default=None)
    parser.set_defaults(handler=handle)


def render_report(report: IdentityReport) -> str:
    head = f"{report.identity.value} checked={report.checked} failures={len(report.failures)}"
    if report.holds_at_zero is not None:
        head += f" n0={'held' if report.holds_at_zero else 'failed'}"
    lines = [head]
    for f in report.failures:
        lines.append(f"  FAIL k={f.k} a={f.a} n={f.n} m={f.m} lhs={f.lhs} rhs={f.rhs}")
    return "\n".join(lines)


def handle(args: argparse.Namespace, cfg: Settings) -> int:
    cfg = cfg.with_overrides(
        VERIFY_K_MAX=args.k_max,
        VERIFY_A_MAX=args.a_max,
        VERIFY_N_MAX=args.n_max,
        VERIFY_M_MAX=args.m_max,
        VERIFY_WORKERS=args.workers,
    )
    bounds = (cfg.VERIFY_K_MAX, cfg.VERIFY_A_MAX, cfg.VERIFY_N_MAX, cfg.VERIFY_M_MAX)
    identities = list(Identity) if args.identity == "all" else [Identity(args.identity)]
    reports = [verify_grid(i, *bounds, workers=cfg.VERIFY_WORKERS) for i in identities]
    passed = all(r.passed for r in reports)

    if args.identity != "all":
        report = reports[0]
        emit(cfg, VerifyReport.from_report(report), render_report(report))
        return 0 if passed else 1

    findings = [
        f
        for f in audit_alt_sum_parity(cfg.VERIFY_K_MAX, cfg.VERIFY_A_MAX, cfg.VERIFY_N_MAX)
        if f.outcome != "agrees"
    ]
    lines = [render_report(r) for r in reports]
    lines.append(f"erratum audit (alternating sum, odd n): {len(findings)} disagreements")
    for f in findings:
        statement = "inexact" if f.statement is None else str(f.statement)
        lines.append(
            f"  k={f.k} a={f.a} n={f.n} statement={statement} oracle={f.oracle} {f.outcome}"
        )
    lines.append("ALL PASS" if passed else "FAILURES")

    report = VerifyAllReport(
        suites=[VerifyReport.from_report(r) for r in reports],
        erratum=[ErratumRow.from_finding(f) for f in findings],
    )
    emit(cfg, report, "\n".join(lines))
    return 0 if passed else 1
