"""Metrics, comparison tables, ASCII Gantt charts, and CSV/JSON export."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Sequence

from .engine import Schedule, context_switches, run
from .policies import make_policy
from .workload import DEFAULT_ALPHA, Workload


class IncompleteScheduleError(ValueError):
    pass


@dataclass(frozen=True)
class ProcessRow:
    pid: int
    arrival: int
    burst: int
    first_start: int
    finish: int
    tat: int
    wt: int
    response: int


@dataclass(frozen=True)
class MetricsReport:
    rows: tuple[ProcessRow, ...]
    atat: Fraction
    awt: Fraction
    art: Fraction
    cs: int
    makespan: int
    utilization: Fraction

    def to_dict(self) -> dict:
        return {
            "rows": [asdict(r) for r in self.rows],
            "atat": float(self.atat),
            "awt": float(self.awt),
            "art": float(self.art),
            "cs": self.cs,
            "makespan": self.makespan,
            "utilization": float(self.utilization),
        }


def fmt_number(value) -> str:
    """Round half-up to two places and drop trailing zeros: 681.30 -> '681.3'."""
    if isinstance(value, Fraction):
        d = Decimal(value.numerator) / Decimal(value.denominator)
    else:
        d = Decimal(str(value))
    d = d.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    text = f"{d:f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def metrics(schedule: Schedule) -> MetricsReport:
    finish = schedule.finish_times()
    first = schedule.first_starts()
    done = {}
    for s in schedule.slices:
        done[s.pid] = done.get(s.pid, 0) + s.duration
    rows = []
    for p in schedule.workload:
        if done.get(p.pid, 0) != p.burst:
            raise IncompleteScheduleError(f"P{p.pid} is not finished in this schedule")
        tat = finish[p.pid] - p.arrival
        rows.append(ProcessRow(p.pid, p.arrival, p.burst, first[p.pid], finish[p.pid],
                               tat, tat - p.burst, first[p.pid] - p.arrival))
    n = len(rows)
    makespan = schedule.makespan
    return MetricsReport(
        rows=tuple(rows),
        atat=Fraction(sum(r.tat for r in rows), n),
        awt=Fraction(sum(r.wt for r in rows), n),
        art=Fraction(sum(r.response for r in rows), n),
        cs=context_switches(schedule),
        makespan=makespan,
        utilization=Fraction(schedule.workload.total_burst, makespan),
    )


def render_metrics(report: MetricsReport) -> str:
    cols = ("pid", "arrival", "burst", "first_start", "finish", "tat", "wt", "response")
    table = [cols] + [tuple(str(getattr(r, c)) for c in cols) for r in report.rows]
    lines = _render_table(table)
    lines.append("")
    lines.append(f"ATAT {fmt_number(report.atat)}  AWT {fmt_number(report.awt)}  "
                 f"ART {fmt_number(report.art)}  CS {report.cs}  "
                 f"makespan {report.makespan}  utilization {fmt_number(report.utilization)}")
    return "\n".join(lines) + "\n"


def _render_table(table) -> list[str]:
    widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
    out = []
    for k, row in enumerate(table):
        out.append("  ".join(cell.rjust(w) if k and i else cell.ljust(w)
                             for i, (cell, w) in enumerate(zip(row, widths))).rstrip())
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return out


# -- Gantt -------------------------------------------------------------------

def _cells(schedule: Schedule):
    t = 0
    for s in schedule.merged():
        if s.start > t:
            yield "idle", t, s.start
        yield f"P{s.pid}", s.start, s.end
        t = s.end


def _render_gantt_row(cells) -> tuple[str, str]:
    bar, marks = "|", ""
    for label, start, _ in cells:
        w = max(len(label), len(str(start)))
        marks = marks.ljust(len(bar) - 1) + str(start)
        bar += label.center(w) + "|"
    marks = marks.ljust(len(bar) - 1) + str(cells[-1][2])
    return bar, marks


def render_gantt(schedule: Schedule, width: int = 80) -> str:
    """Two-line ASCII chart per row: labelled cells, then their boundaries.

    Cells wrap onto a new row when the next one would cross ``width``
    columns; each wrapped row restates its starting boundary.
    """
    if width < 20:
        raise ValueError("gantt width must be >= 20")
    rows: list[list] = [[]]
    for cell in _cells(schedule):
        trial = rows[-1] + [cell]
        if rows[-1] and len(_render_gantt_row(trial)[1]) > width:
            rows.append([cell])
        else:
            rows[-1] = trial
    lines = []
    for cells in rows:
        lines.extend(_render_gantt_row(cells))
    return "\n".join(lines) + "\n"


# -- comparison --------------------------------------------------------------

@dataclass(frozen=True)
class ComparisonRow:
    algorithm: str
    tq: str
    report: MetricsReport
    schedule: Schedule


def compare(workload: Workload, policies: Sequence[str], alpha: int = DEFAULT_ALPHA,
            tq: int = 20, regroup: str = "static") -> list[ComparisonRow]:
    if not policies:
        raise ValueError("at least one policy is required")
    rows = []
    for name in policies:
        policy = make_policy(name, workload, alpha=alpha, tq=tq, regroup=regroup)
        schedule = run(workload, policy)
        schedule.validate()
        rows.append(ComparisonRow(name.upper(), policy.describe_quantum(),
                                  metrics(schedule), schedule))
    return rows


def comparison_table(rows: Sequence[ComparisonRow]) -> str:
    table = [("Algorithm", "TQ", "ATAT", "AWT", "CS")]
    for r in rows:
        table.append((r.algorithm, r.tq, fmt_number(r.report.atat),
                      fmt_number(r.report.awt), str(r.report.cs)))
    return "\n".join(_render_table(table)) + "\n"


CSV_HEADER = ("case", "algorithm", "tq", "atat", "awt", "cs")


def comparison_csv(rows: Sequence[ComparisonRow], case: str = "", header: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow((case, r.algorithm, r.tq, fmt_number(r.report.atat),
                         fmt_number(r.report.awt), r.report.cs))
    return buf.getvalue()


def comparison_json(rows: Sequence[ComparisonRow], case: str = "") -> str:
    payload = [{"case": case, "algorithm": r.algorithm, "tq": r.tq, **r.report.to_dict()}
               for r in rows]
    return json.dumps(payload, indent=2) + "\n"
