"""Command-line front end: ``gbtq simulate | compare | cases``."""

from __future__ import annotations

import argparse
import json
import sys

from . import report
from .engine import SimulationError, run
from .expected import published
from .policies import POLICY_NAMES, UnknownPolicyError, make_policy
from .workload import CASE_NUMBERS, DEFAULT_ALPHA, WorkloadError, builtin_case, load_workload


class UsageError(ValueError):
    pass


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _add_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--case", type=int, metavar="N", help="built-in case 1..6")
    src.add_argument("--workload", metavar="PATH", help="CSV file with header pid,arrival,burst")


def _add_common(p):
    p.add_argument("--alpha", type=_positive, default=None,
                   help=f"GBTQ/MMRR threshold (default {DEFAULT_ALPHA})")
    p.add_argument("--tq", type=_positive, default=20, help="RR time quantum (default 20)")
    p.add_argument("--regroup", choices=("static", "dynamic"), default="static")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--gantt", action="store_true", help="print an ASCII Gantt chart")
    p.add_argument("--gantt-width", type=int, default=80, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbtq", description="CPU scheduling simulator with group-based time quantum RR.")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run one policy on one workload")
    _add_source(sim)
    sim.add_argument("--algo", default="gbtq", help=f"one of {', '.join(POLICY_NAMES)}")
    _add_common(sim)

    cmp_ = sub.add_parser("compare", help="compare several policies on one workload")
    _add_source(cmp_)
    cmp_.add_argument("--algos", default="rr,gbtq", help="comma-separated policy names")
    _add_common(cmp_)

    cases = sub.add_parser("cases", help="replay the six built-in cases against published values")
    cases.add_argument("--format", choices=("table", "json", "csv"), default="table")
    return parser


def _resolve_workload(args):
    if args.case is not None:
        workload, alpha = builtin_case(args.case)
    else:
        workload, alpha = load_workload(args.workload), DEFAULT_ALPHA
    if args.alpha is not None:
        alpha = args.alpha
    return workload, alpha


def _check_gantt_width(args):
    if args.gantt and args.gantt_width < 20:
        raise UsageError("--gantt-width must be >= 20")


def cmd_simulate(args) -> str:
    _check_gantt_width(args)
    workload, alpha = _resolve_workload(args)
    policy = make_policy(args.algo, workload, alpha=alpha, tq=args.tq, regroup=args.regroup)
    schedule = run(workload, policy)
    schedule.validate()
    m = report.metrics(schedule)
    if args.format == "json":
        out = json.dumps({"workload": workload.name, "algorithm": args.algo.upper(),
                          "tq": policy.describe_quantum(), **m.to_dict()}, indent=2) + "\n"
    elif args.format == "csv":
        row = report.ComparisonRow(args.algo.upper(), policy.describe_quantum(), m, schedule)
        out = report.comparison_csv([row], case=workload.name)
    else:
        out = (f"{workload.name}  {args.algo.upper()}  TQ {policy.describe_quantum()}\n\n"
               + report.render_metrics(m))
    if args.gantt:
        out += "\n" + report.render_gantt(schedule, args.gantt_width)
    return out


def _parse_algos(text):
    algos = [a.strip() for a in text.split(",") if a.strip()]
    if not algos:
        raise UsageError("--algos needs at least one policy name")
    return algos


def cmd_compare(args) -> str:
    _check_gantt_width(args)
    algos = _parse_algos(args.algos)
    workload, alpha = _resolve_workload(args)
    rows = report.compare(workload, algos, alpha=alpha, tq=args.tq, regroup=args.regroup)
    if args.format == "csv":
        out = report.comparison_csv(rows, case=workload.name)
    elif args.format == "json":
        out = report.comparison_json(rows, case=workload.name)
    else:
        out = report.comparison_table(rows)
    if args.gantt:
        for r in rows:
            out += f"\n{r.algorithm}\n" + report.render_gantt(r.schedule, args.gantt_width)
    return out


def _audit_case(n):
    """Rows of (ours, published, cell statuses) for one case."""
    workload, alpha = builtin_case(n)
    ours = {r.algorithm: r for r in report.compare(workload, ["rr", "gbtq"], alpha=alpha)}
    audit = []
    for pub in published(n):
        row = ours[pub.algorithm]
        got = {"tq": row.tq, "atat": report.fmt_number(row.report.atat),
               "awt": report.fmt_number(row.report.awt), "cs": str(row.report.cs)}
        want = {"tq": pub.tq, "atat": pub.atat, "awt": pub.awt, "cs": str(pub.cs)}
        status = {}
        for key in got:
            if got[key] == want[key]:
                status[key] = "MATCH"
            elif key != "tq" and pub.unverified:
                status[key] = "UNVERIFIED"
            elif key != "tq" and pub.note:
                status[key] = "NOTED"
            else:
                status[key] = "MISMATCH"
        audit.append((row, pub, got, want, status))
    return audit


def cmd_cases(args) -> tuple[str, int]:
    audits = {n: _audit_case(n) for n in CASE_NUMBERS}
    failed = any(s == "MISMATCH" for a in audits.values() for *_, st in a for s in st.values())
    if args.format == "csv":
        out = "".join(report.comparison_csv([row for row, *_ in audits[n]], case=str(n),
                                            header=(n == CASE_NUMBERS[0]))
                      for n in CASE_NUMBERS)
        return out, int(failed)
    if args.format == "json":
        payload = [{"case": n, "algorithm": row.algorithm, "got": got, "published": want,
                    "status": st, "note": pub.note}
                   for n in CASE_NUMBERS for row, pub, got, want, st in audits[n]]
        return json.dumps(payload, indent=2) + "\n", int(failed)

    lines = []
    for n in CASE_NUMBERS:
        lines.append(f"Case {n}")
        table = [("Algorithm", "TQ", "ATAT", "AWT", "CS")]
        notes = []
        for row, pub, got, want, st in audits[n]:
            cells = [row.algorithm]
            for key in ("tq", "atat", "awt", "cs"):
                cell = f"{got[key]} [{st[key]}]"
                if st[key] != "MATCH":
                    cell = f"{got[key]} [{st[key]}: published {want[key]}]"
                cells.append(cell)
            table.append(tuple(cells))
            if pub.note and any(s != "MATCH" for s in st.values()):
                notes.append(f"  note ({row.algorithm}): {pub.note}")
        lines.extend(report._render_table(table))
        lines.extend(notes)
        lines.append("")
    lines.append("result: " + ("MISMATCH found" if failed else
                               "all checked cells match; discrepancies annotated"))
    return "\n".join(lines) + "\n", int(failed)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    try:
        if args.command == "simulate":
            out = cmd_simulate(args)
        elif args.command == "compare":
            out = cmd_compare(args)
        else:
            out, status = cmd_cases(args)
    except (WorkloadError, UnknownPolicyError, UsageError, SimulationError, OSError, ValueError) as exc:
        print(f"gbtq: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
