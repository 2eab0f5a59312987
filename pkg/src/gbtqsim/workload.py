"""Process records, workload CSV parsing, and the six built-in cases."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

HEADER = ("pid", "arrival", "burst")
DEFAULT_ALPHA = 20


class WorkloadError(ValueError):
    """Raised for malformed or invalid workload input."""


@dataclass(frozen=True)
class ProcessSpec:
    pid: int
    arrival: int
    burst: int

    def __post_init__(self):
        if self.pid < 1:
            raise WorkloadError(f"pid must be positive, got {self.pid}")
        if self.arrival < 0:
            raise WorkloadError(f"arrival < 0 for P{self.pid}")
        if self.burst < 1:
            raise WorkloadError(f"burst < 1 for P{self.pid}")


@dataclass(frozen=True)
class Workload:
    processes: tuple[ProcessSpec, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "processes", tuple(self.processes))
        if not self.processes:
            raise WorkloadError("workload is empty")
        seen = set()
        for p in self.processes:
            if p.pid in seen:
                raise WorkloadError(f"duplicate pid {p.pid}")
            seen.add(p.pid)

    def __len__(self):
        return len(self.processes)

    def __iter__(self):
        return iter(self.processes)

    def by_pid(self) -> dict[int, ProcessSpec]:
        return {p.pid: p for p in self.processes}

    @property
    def total_burst(self) -> int:
        return sum(p.burst for p in self.processes)

    @classmethod
    def from_tuples(cls, rows, name=""):
        """Build from ``(arrival, burst)`` pairs; pids are assigned 1..N."""
        return cls(
            tuple(ProcessSpec(i, a, b) for i, (a, b) in enumerate(rows, start=1)),
            name,
        )


def _int_field(value, field, row_no):
    try:
        return int(value.strip())
    except (ValueError, AttributeError):
        raise WorkloadError(f"row {row_no}: {field} is not an integer: {value!r}") from None


def parse_workload(text: str, name: str = "") -> Workload:
    """Parse ``pid,arrival,burst`` CSV text. Row numbers in errors are 1-based file lines."""
    reader = csv.reader(io.StringIO(text))
    rows = [(i, r) for i, r in enumerate(reader, start=1) if r and any(c.strip() for c in r)]
    if not rows:
        raise WorkloadError("empty input")
    line_no, header = rows[0]
    if tuple(c.strip().lower() for c in header) != HEADER:
        raise WorkloadError(f"row {line_no}: expected header 'pid,arrival,burst', got {','.join(header)!r}")
    if len(rows) == 1:
        raise WorkloadError("empty body: no process rows")

    procs = []
    seen: dict[int, int] = {}
    for line_no, row in rows[1:]:
        if len(row) != 3:
            raise WorkloadError(f"row {line_no}: expected 3 fields, got {len(row)}")
        pid, arrival, burst = (_int_field(v, f, line_no) for v, f in zip(row, HEADER))
        if pid < 1:
            raise WorkloadError(f"row {line_no}: pid must be positive")
        if pid in seen:
            raise WorkloadError(f"row {line_no}: duplicate pid {pid} (first seen on row {seen[pid]})")
        if burst < 1:
            raise WorkloadError(f"row {line_no}: burst < 1")
        if arrival < 0:
            raise WorkloadError(f"row {line_no}: arrival < 0")
        seen[pid] = line_no
        procs.append(ProcessSpec(pid, arrival, burst))
    return Workload(tuple(procs), name)


def format_workload(workload: Workload) -> str:
    lines = [",".join(HEADER)]
    lines += [f"{p.pid},{p.arrival},{p.burst}" for p in workload]
    return "\n".join(lines) + "\n"


def load_workload(path) -> Workload:
    with open(path, encoding="utf-8") as fh:
        return parse_workload(fh.read(), name=str(path))


# (arrival, burst) rows of the paper's case tables, in process order P1..PN.
_CASES = {
    1: [(0, 7), (0, 15), (0, 24), (0, 84), (0, 123), (0, 145), (0, 150), (0, 175), (0, 180), (0, 200)],
    2: [(0, 11), (0, 46), (0, 82), (0, 95)],
    3: [(0, 81), (0, 82), (0, 83), (0, 84)],
    4: [(0, 61), (0, 62), (0, 63), (0, 64), (0, 65), (0, 66), (0, 67), (0, 68)],
    5: [(0, 7), (5, 14), (15, 55), (50, 75), (75, 23)],
    6: [(0, 24), (17, 48), (35, 65), (50, 74), (70, 89), (80, 100), (130, 150)],
}

CASE_NUMBERS = tuple(sorted(_CASES))


def builtin_case(n: int) -> tuple[Workload, int]:
    if n not in _CASES:
        raise WorkloadError(f"no built-in case {n}; choose 1..{len(_CASES)}")
    return Workload.from_tuples(_CASES[n], name=f"case{n}"), DEFAULT_ALPHA
